// Acceptance campaign: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "chevdv/dv.hpp"
#include "chevdv/errors.hpp"
#include "chevdv/random.hpp"
#include "chevdv/stability.hpp"
#include "chevdv/unimodular.hpp"

using namespace chevdv;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

// FNV-1a, so per-system streams do not depend on the standard library.
std::uint64_t tag(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

const std::vector<std::pair<std::string, std::string>> kDvSystems = {
    {"B3", "F5"}, {"B4", "Z/8"}, {"C3", "F7"}, {"E6", "F2"}, {"E6", "F5"}};

Outcome commutator_formula() {
  Outcome o;
  std::size_t total = 0;
  for (std::string s : {"A2", "B2", "B3", "C3", "D4", "E6", "E7"}) {
    std::size_t n = 0;
    auto f = verify_commutator_formula(ChevalleySystem::parse(s), Ring::integers(), {-2, -1, 0, 1, 2}, &n);
    total += n;
    o.require(!f, s + ": R2 fails");
  }
  if (o.ok) o.detail = std::to_string(total) + " instances";
  return o;
}

Outcome representations() {
  Outcome o;
  const std::map<std::string, std::size_t> dims = {{"B3", 7}, {"E6", 27}, {"E7", 56}};
  for (const auto& [s, d] : dims) o.require(ChevalleySystem::parse(s)->rep().dim() == d, s + " dimension");
  auto e6 = ChevalleySystem::parse("E6");
  const WeightDiagram& diag = e6->rep().diagram();
  o.require(diag.size() == 27, "E6 node count");
  std::map<int, int> counts;
  for (const auto& e : diag.edges) ++counts[e.simple];
  // Every simple root labels 6 edges of the 27-node diagram.
  o.require(counts == std::map<int, int>{{1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}, {6, 6}}, "E6 edge counts");
  if (o.ok) o.detail = "dims 7/27/56, E6 edges 6 per label";
  return o;
}

Outcome remark_fixed_vectors() {
  Outcome o;
  Rng rng(2101);
  for (std::string s : {"E6", "E7"}) {
    auto sys = ChevalleySystem::parse(s);
    const Representation& rep = sys->rep();
    const int l = sys->roots().rank();
    RootId m1 = sys->roots().negate(sys->roots().simple(1));
    for (Ring R : {Ring::prime_field(2), Ring::prime_field(5)})
      for (int t = 0; t < 100; ++t) {
        Vec v(R, rep.dim());
        for (int k = 1; k <= l - 1; ++k) v.set(*rep.index_of_label(k), random_element(rng, R));
        RingValue xi(R, random_element(rng, R));
        o.require(rep.unipotent_action(m1, xi) * v == v, s + "/" + R.name() + ": vector moved");
      }
  }
  if (o.ok) o.detail = "400 vectors fixed";
  return o;
}

Outcome stability_lemmas() {
  Outcome o;
  Rng rng(2102);
  std::size_t checks = 0;
  for (Ring R : {Ring::prime_field(5), Ring::integers_mod(12), Ring::integers()}) {
    for (int t = 0; t < 200; ++t) {
      for (std::size_t h = 3; h <= 6; ++h) {
        Vec v = random_unimodular(rng, R, h);
        try {
          UnipotentPair p = simple_lemma_reduce(v);
          Vec w = p.y * (p.x * v);
          bool shape = true;
          for (std::size_t r = 0; r < h; ++r)
            for (std::size_t c = 0; c < h; ++c) {
              Int d = r == c ? 1 : 0;
              if (c != h - 1 && p.x(r, c) != d) shape = false;
              if (r != h - 1 && p.y(r, c) != d) shape = false;
            }
          o.require(shape && w[h - 1] == 0 && is_unimodular(w.slice(0, h - 1)), R.name() + " simple lemma " + v.to_string());
        } catch (const Error& e) {
          o.require(false, R.name() + " simple lemma " + v.to_string() + ": " + e.what());
        }
        ++checks;
      }
      // Over Z the lemma needs l - 1 >= asr(Z) = 2.
      for (std::size_t l = R.is_finite() ? 2 : 3; l <= 4; ++l) {
        Vec v = random_isotropic(rng, R, l);
        try {
          UnipotentPair p = asr_reduce(v);
          Vec w = p.y * (p.x * v);
          bool shape = true, zero = true;
          for (std::size_t r = 0; r < 2 * l; ++r)
            for (std::size_t c = 0; c < 2 * l; ++c) {
              Int d = r == c ? 1 : 0;
              if (!(r < l && c >= l) && p.x(r, c) != d) shape = false;
              if (!(r >= l && c < l) && p.y(r, c) != d) shape = false;
            }
          for (std::size_t k = l; k < 2 * l; ++k) zero = zero && w[k] == 0;
          o.require(shape && zero && preserves_split_form(p.x) && preserves_split_form(p.y),
                    R.name() + " asr " + v.to_string());
        } catch (const Error& e) {
          o.require(false, R.name() + " asr " + v.to_string() + ": " + e.what());
        }
        ++checks;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " columns";
  return o;
}

Outcome dv_round_trip() {
  Outcome o;
  for (const auto& [s, r] : kDvSystems) {
    auto sys = ChevalleySystem::parse(s);
    Ring R = Ring::parse(r);
    Rng rng = Rng(2103).split(tag(s + r));
    for (int t = 0; t < 100; ++t) {
      SteinbergWord w = random_word(rng, sys, R, 20);
      try {
        DVDecomposition d = factorize_dv(w);
        std::string why;
        bool ok = certify(d, w, &why) && d.reduced && is_in_S_tilde(d.a).in_S_tilde;
        o.require(ok, s + "/" + r + ": " + why + " on " + serialize_word(w));
      } catch (const Error& e) {
        o.require(false, s + "/" + r + ": " + e.what());
      }
    }
  }
  if (o.ok) o.detail = "500 words";
  return o;
}

Outcome absorption_lemma() {
  Outcome o;
  for (const auto& [s, r] : kDvSystems) {
    auto sys = ChevalleySystem::parse(s);
    const RootSystem& rs = sys->roots();
    Ring R = Ring::parse(r);
    ParabolicPair pp = parabolic_pair(rs);
    Rng rng = Rng(2104).split(tag(s + r));
    CollectOrder order(rs, [&](RootId a) { return rs.coeff(a, pp.i) < 0; });
    const Vec vplus = sys->rep().highest_weight_vector(R);
    for (int t = 0; t < 100; ++t) {
      SteinbergWord raw = random_word(rng, sys, R, 8, [&](RootId a) { return rs.coeff(a, pp.i) == 0; });
      try {
        SteinbergWord a = reduce_levi_part(raw).a_prime;
        o.require(is_in_S_tilde(a).in_S_tilde, s + ": a not in S~");
        SteinbergWord z = SteinbergWord::single(sys, R, rs.negate(rs.simple(pp.i)), random_nonzero(rng, R));
        SteinbergWord c = conjugate_collect(z, a, order);
        bool roots_ok = true;
        for (const auto& g : c.gens()) roots_ok = roots_ok && rs.coeff(g.root, pp.i) < 0 && rs.coeff(g.root, pp.j) == 0;
        o.require(roots_ok, s + "/" + r + ": root outside StL_j");
        o.require(apply(c, vplus) == vplus, s + "/" + r + ": v+ moved");
        o.require(evaluate(c) == evaluate(invert(a) * z * a), s + "/" + r + ": collection disagrees with matrices");
      } catch (const Error& e) {
        o.require(false, s + "/" + r + ": " + e.what());
      }
    }
  }
  if (o.ok) o.detail = "500 pairs";
  return o;
}

Outcome kernel_reduction() {
  Outcome o;
  for (const auto& [s, r] : kDvSystems) {
    auto sys = ChevalleySystem::parse(s);
    const RootSystem& rs = sys->roots();
    Ring R = Ring::parse(r);
    ParabolicPair pp = parabolic_pair(rs);
    Rng rng = Rng(2105).split(tag(s + r));
    for (int t = 0; t < 50; ++t) {
      SteinbergWord c = random_relator(rng, sys, R);
      SteinbergWord wj = random_word(rng, sys, R, 10, [&](RootId a) { return rs.coeff(a, pp.j) == 0; });
      SteinbergWord w = c * wj;
      try {
        o.require(evaluate(c).is_identity(), s + ": relator is not trivial");
        KernelSplit d = dv_reduce(w);
        KernelSplit k = stab_kernel_express(w);
        for (const KernelSplit* ks : {&d, &k}) {
          Mat A = evaluate(ks->a);
          o.require(A * evaluate(ks->b) == evaluate(w), s + "/" + r + ": a b != w");
          o.require(classify(ks->a).L(pp.i) && classify(ks->b).L(pp.j), s + "/" + r + ": masks");
          o.require(in_intersection_image(w, A), s + "/" + r + ": a is not block diagonal");
        }
      } catch (const Error& e) {
        o.require(false, s + "/" + r + ": " + e.what() + " on " + serialize_word(w));
      }
    }
  }
  if (o.ok) o.detail = "250 inputs";
  return o;
}

Outcome tilde_generators() {
  Outcome o;
  Rng rng(2106);
  std::size_t count = 0;
  for (Ring R : {Ring::integers_mod(9), Ring::prime_field(7)}) {
    for (std::size_t n : {2, 3}) {
      std::size_t valid = 0;
      while (valid < 100) {
        Mat x(R, n, n);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) x.set(a, b, random_element(rng, R));
        RingValue xi(R, random_element(rng, R));
        Mat y = Mat::identity(R, n);
        y.set(0, 0, xi.value());
        if (!R.is_unit(determinant(Mat::identity(R, n) + x * y))) continue;
        ++valid;
        TildeGenerator g = tilde_E_generator(x, xi);
        Mat diag(R, 2 * n, 2 * n);
        diag.set_block(0, 0, g.A);
        diag.set_block(n, n, g.B_inv);
        o.require(g.factors[0] * g.factors[1] * g.factors[2] * g.factors[3] == diag, R.name() + ": factors");
        o.require(g.g == g.A * g.B_inv, R.name() + ": g");
      }
      count += valid;
    }
    for (int t = 0; t < 100; ++t) {
      Mat x(R, {{random_element(rng, R)}});
      RingValue xi(R, random_element(rng, R));
      if (!R.is_unit(R.add(1, R.mul(x(0, 0), xi.value())))) continue;
      o.require(tilde_E_generator(x, xi).g.is_identity(), R.name() + ": n = 1 not identity");
      ++count;
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " generators";
  return o;
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  if (pclose(pipe) != 0) out += "\n<nonzero exit>";
  return out;
}

Outcome determinism(const std::string& tool) {
  Outcome o;
  for (const char* fmt : {"", " --json"}) {
    std::string cmd = "'" + tool + "' selftest --seed 42" + fmt + " 2>&1";
    std::string a = capture(cmd), b = capture(cmd);
    o.require(!a.empty() && a == b, std::string("reports differ") + fmt);
    o.require(a.find("<nonzero exit>") == std::string::npos, "selftest failed");
  }
  if (o.ok) o.detail = "text and JSON reports identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string tool = argc > 1 ? argv[1] : "chevdv";
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"commutator formula over Z", 120, commutator_formula},
      {"representation dimensions and E6 diagram", 0, representations},
      {"x_{-alpha_1} fixes label 1..l-1 vectors", 5, remark_fixed_vectors},
      {"stability lemmas", 30, stability_lemmas},
      {"DV round trip", 180, dv_round_trip},
      {"absorption of x_{-alpha_i}^a", 0, absorption_lemma},
      {"kernel reduction witness", 120, kernel_reduction},
      {"tilde E generators", 5, tilde_generators},
      {"selftest determinism", 0, [&] { return determinism(tool); }},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& c = criteria[k];
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = e.what();
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && sec > c.limit_s) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_s)) + " s budget)";
    }
    if (!o.ok) ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "PASS" : "FAIL") << " [" << k + 1 << "] " << c.name << ": " << o.detail << " (" << sec << " s)";
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
