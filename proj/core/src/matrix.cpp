#include "chevdv/matrix.hpp"

#include <sstream>

#include "chevdv/errors.hpp"

namespace chevdv {

namespace {

void require_same(const Ring& a, const Ring& b) {
  if (!(a == b)) throw Error(ErrorCode::RingMismatch, a.name() + " vs " + b.name());
}

}  // namespace

Vec::Vec(const Ring& ring, std::vector<Int> values) : ring_(ring), data_(std::move(values)) {
  for (auto& v : data_) v = ring_.reduce(v);
}

Vec Vec::basis(const Ring& ring, std::size_t n, std::size_t k) {
  Vec v(ring, n);
  v.set(k, 1);
  return v;
}

bool Vec::is_zero() const noexcept {
  for (Int v : data_)
    if (v != 0) return false;
  return true;
}

Vec Vec::slice(std::size_t first, std::size_t count) const {
  return Vec(ring_, std::vector<Int>(data_.begin() + first, data_.begin() + first + count));
}

std::string Vec::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < data_.size(); ++i) os << (i ? "," : "") << data_[i];
  os << ")";
  return os.str();
}

Mat::Mat(const Ring& ring, std::initializer_list<std::initializer_list<Int>> rows)
    : ring_(ring), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::PreconditionViolated, "ragged matrix literal");
    for (Int v : row) data_.push_back(ring_.reduce(v));
  }
}

Mat Mat::identity(const Ring& ring, std::size_t n) {
  Mat m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

bool Mat::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
  Mat b(ring_, h, w);
  for (std::size_t r = 0; r < h; ++r)
    for (std::size_t c = 0; c < w; ++c) b.data_[r * w + c] = (*this)(r0 + r, c0 + c);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  require_same(ring_, b.ring_);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) data_[(r0 + r) * cols_ + c0 + c] = b(r, c);
}

Vec Mat::column(std::size_t c) const {
  Vec v(ring_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.set(r, (*this)(r, c));
  return v;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same(a.ring_, b.ring_);
  if (a.cols_ != b.rows_) throw Error(ErrorCode::PreconditionViolated, "matrix shape mismatch");
  const Ring& R = a.ring_;
  Mat out(R, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        Int bkj = b(k, j);
        if (bkj == 0) continue;
        auto& slot = out.data_[i * out.cols_ + j];
        slot = R.add(slot, R.mul(aik, bkj));
      }
    }
  return out;
}

Vec operator*(const Mat& a, const Vec& v) {
  require_same(a.ring_, v.ring());
  if (a.cols_ != v.size()) throw Error(ErrorCode::PreconditionViolated, "matrix/vector shape mismatch");
  const Ring& R = a.ring_;
  Vec out(R, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Int acc = 0;
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (a(i, k) != 0 && v[k] != 0) acc = R.add(acc, R.mul(a(i, k), v[k]));
    out.set(i, acc);
  }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same(a.ring_, b.ring_);
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.ring_.add(a.data_[i], b.data_[i]);
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  require_same(a.ring_, b.ring_);
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.ring_.sub(a.data_[i], b.data_[i]);
  return out;
}

Mat Mat::scaled(Int s) const {
  Mat out = *this;
  Int rs = ring_.reduce(s);
  for (auto& v : out.data_) v = ring_.mul(v, rs);
  return out;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ";" : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
  }
  os << "]";
  return os.str();
}

Int dot(const Vec& a, const Vec& b) {
  require_same(a.ring(), b.ring());
  const Ring& R = a.ring();
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = R.add(acc, R.mul(a[i], b[i]));
  return acc;
}

Int determinant(const Mat& a) {
  if (!a.is_square()) throw Error(ErrorCode::PreconditionViolated, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  const Ring& R = a.ring();
  if (n == 0) return 1;
  Mat x = a;
  for (std::size_t step = 1; step < n; ++step) {
    Mat mu(R, n, n);
    Int trailing = 0;
    for (std::size_t i = n; i-- > 0;) {
      mu.set(i, i, R.neg(trailing));
      trailing = R.add(trailing, x(i, i));
      for (std::size_t j = i + 1; j < n; ++j) mu.set(i, j, x(i, j));
    }
    x = mu * a;
  }
  return (n % 2 == 1) ? x(0, 0) : R.neg(x(0, 0));
}

Mat adjugate(const Mat& a) {
  const std::size_t n = a.rows();
  const Ring& R = a.ring();
  Mat adj(R, n, n);
  if (n == 1) {
    adj.set(0, 0, 1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat minor(R, n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.set(mr, mc++, a(r, c));
        }
        ++mr;
      }
      Int d = determinant(minor);
      adj.set(i, j, ((i + j) % 2 == 0) ? d : R.neg(d));
    }
  return adj;
}

Mat inverse(const Mat& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotInvertible, "non-square matrix");
  const Ring& R = a.ring();
  Int d = determinant(a);
  if (!R.is_unit(d)) throw Error(ErrorCode::NotInvertible, "determinant " + std::to_string(d) + " is not a unit");
  return adjugate(a).scaled(R.inverse(d));
}

Mat flip_matrix(const Ring& ring, std::size_t l) {
  Mat p(ring, l, l);
  for (std::size_t i = 0; i < l; ++i) p.set(i, l - 1 - i, 1);
  return p;
}

Mat transvection(const Ring& ring, std::size_t n, std::size_t row, std::size_t col, Int c) {
  Mat t = Mat::identity(ring, n);
  t.set(row, col, c);
  return t;
}

}  // namespace chevdv
