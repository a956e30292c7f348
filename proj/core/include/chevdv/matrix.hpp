#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "chevdv/ring.hpp"

namespace chevdv {

/// Dense column over a ring. Entries are canonical representatives.
class Vec {
 public:
  Vec(const Ring& ring, std::size_t n) : ring_(ring), data_(n, 0) {}
  Vec(const Ring& ring, std::vector<Int> values);
  Vec(const Ring& ring, std::initializer_list<Int> values) : Vec(ring, std::vector<Int>(values)) {}
  static Vec basis(const Ring& ring, std::size_t n, std::size_t k);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return data_.size(); }
  Int operator[](std::size_t i) const { return data_[i]; }
  RingValue at(std::size_t i) const { return {ring_, data_.at(i)}; }
  void set(std::size_t i, Int v) { data_.at(i) = ring_.reduce(v); }
  std::span<const Int> values() const noexcept { return data_; }
  bool is_zero() const noexcept;
  Vec slice(std::size_t first, std::size_t count) const;

  friend bool operator==(const Vec&, const Vec&) = default;
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Int> data_;
};

/// Dense row-major matrix over a ring.
class Mat {
 public:
  Mat(const Ring& ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Mat(const Ring& ring, std::initializer_list<std::initializer_list<Int>> rows);
  static Mat identity(const Ring& ring, std::size_t n);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Int v) { data_[r * cols_ + c] = ring_.reduce(v); }
  void add_to(std::size_t r, std::size_t c, Int v) {
    data_[r * cols_ + c] = ring_.add(data_[r * cols_ + c], ring_.reduce(v));
  }

  bool is_identity() const noexcept;
  bool is_square() const noexcept { return rows_ == cols_; }
  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Vec column(std::size_t c) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  Mat scaled(Int s) const;

  friend bool operator==(const Mat&, const Mat&) = default;
  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

Int dot(const Vec& a, const Vec& b);

/// Division-free determinant (Bird's algorithm), valid over any commutative ring.
Int determinant(const Mat& a);
Mat adjugate(const Mat& a);
/// Inverse through the adjugate; throws NotInvertible unless det is a unit.
Mat inverse(const Mat& a);

/// The l x l matrix with ones on the secondary diagonal.
Mat flip_matrix(const Ring& ring, std::size_t l);

/// Elementary transvection e + c*E_{row,col} (row != col).
Mat transvection(const Ring& ring, std::size_t n, std::size_t row, std::size_t col, Int c);

}  // namespace chevdv
