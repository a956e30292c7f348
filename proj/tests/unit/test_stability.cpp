#include <doctest.h>

#include "chevdv/errors.hpp"
#include "chevdv/random.hpp"
#include "chevdv/stability.hpp"

using namespace chevdv;

namespace {

bool simple_post(const Vec& v, const UnipotentPair& p) {
  Vec w = p.y * (p.x * v);
  return w[v.size() - 1] == 0 && is_unimodular(w.slice(0, v.size() - 1));
}

bool asr_post(const Vec& v, const UnipotentPair& p) {
  const std::size_t l = v.size() / 2;
  Vec w = p.y * (p.x * v);
  for (std::size_t k = l; k < 2 * l; ++k)
    if (w[k] != 0) return false;
  return preserves_split_form(p.x) && preserves_split_form(p.y) && is_unimodular(w.slice(0, l));
}

}  // namespace

TEST_SUITE("stability") {
  TEST_CASE("simple lemma examples") {
    Ring z = Ring::integers();
    auto id = simple_lemma_reduce(Vec(z, {1, 0, 0}));
    CHECK(id.x.is_identity());
    CHECK(id.y.is_identity());

    Ring f5 = Ring::prime_field(5);
    Vec v(f5, {0, 0, 2});
    auto p = simple_lemma_reduce(v);
    CHECK(p.x == Mat(f5, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(p.y == Mat(f5, {{1, 0, 0}, {0, 1, 0}, {4, 0, 1}}));
    CHECK(p.y * (p.x * v) == Vec(f5, {2, 0, 0}));

    Vec u(z, {6, 10, 15});
    auto q = simple_lemma_reduce(u);
    CHECK(q.x * u == Vec(z, {21, 10, 15}));
    CHECK(simple_post(u, q));
    CHECK_THROWS_AS(simple_lemma_reduce(Vec(z, {2, 4, 6})), Error);
  }

  TEST_CASE("simple lemma on random columns") {
    Rng rng(17);
    for (Ring R : {Ring::prime_field(5), Ring::integers_mod(12), Ring::integers()})
      for (int t = 0; t < 20; ++t)
        for (std::size_t h = 3; h <= 6; ++h) {
          Vec v = random_unimodular(rng, R, h);
          CHECK(simple_post(v, simple_lemma_reduce(v)));
        }
  }

  TEST_CASE("hyperbolic embedding") {
    Ring f7 = Ring::prime_field(7);
    CHECK(hyperbolic_embed(Mat::identity(f7, 3)).is_identity());
    Mat g = Mat::identity(f7, 3);
    g.set(0, 0, 3);
    Mat h = hyperbolic_embed(g);
    Mat expect = Mat::identity(f7, 6);
    expect.set(0, 0, 3);
    expect.set(5, 5, 5);
    CHECK(h == expect);
    CHECK(preserves_split_form(h));
    Mat a(f7, {{1, 2, 0}, {0, 1, 4}, {3, 0, 1}});
    Mat b(f7, {{2, 1, 1}, {1, 1, 0}, {0, 5, 1}});
    CHECK(hyperbolic_embed(a * b) == hyperbolic_embed(a) * hyperbolic_embed(b));
    CHECK(preserves_split_form(hyperbolic_embed(a)));
  }

  TEST_CASE("antipersymmetric completion") {
    Ring f5 = Ring::prime_field(5);
    Mat zero = antipersymmetric_complete(Vec(f5, {1, 0}), Vec(f5, {3, 4}));
    CHECK(zero == Mat(f5, 2, 2));
    Vec up(f5, {0, 0}), um(f5, {1, 0});
    Mat a = antipersymmetric_complete(up, um);
    CHECK(is_p_alternating(a));
    CHECK(is_unimodular(a * um));
    Ring z = Ring::integers();
    Vec zp(z, {2, 0, 0}), zm(z, {0, 0, 3});
    Mat b = antipersymmetric_complete(zp, zm);
    CHECK(is_p_alternating(b));
    Vec s = b * zm;
    Vec sum(z, {zp[0] + s[0], zp[1] + s[1], zp[2] + s[2]});
    CHECK(is_unimodular(sum));
  }

  TEST_CASE("column_to_e1") {
    Ring z = Ring::integers();
    CHECK(column_to_e1(Vec(z, {1, 0, 0})).steps.empty());
    auto f = column_to_e1(Vec(z, {0, 1}));
    CHECK(f.steps == std::vector<Transvection>{{0, 1, 1}, {1, 0, -1}});
    CHECK(f.matrix() * Vec(z, {0, 1}) == Vec(z, {1, 0}));
    auto g = column_to_e1(Vec(z, {6, 10, 15}));
    CHECK(g.steps.size() <= 6);
    CHECK(g.matrix() * Vec(z, {6, 10, 15}) == Vec::basis(z, 3, 0));
    CHECK((g.matrix() * g.inverse_matrix()).is_identity());
    Rng rng(8);
    for (Ring R : {Ring::prime_field(7), Ring::integers_mod(12), Ring::integers()})
      for (int t = 0; t < 20; ++t) {
        Vec v = random_unimodular(rng, R, 4);
        CHECK(column_to_e1(v).matrix() * v == Vec::basis(R, 4, 0));
      }
    CHECK_THROWS_AS(column_to_e1(Vec(z, {2, 4})), Error);
  }

  TEST_CASE("asr reduction") {
    Ring f5 = Ring::prime_field(5);
    auto id = asr_reduce(Vec::basis(f5, 4, 0));
    CHECK(id.x.is_identity());
    CHECK(id.y.is_identity());
    Vec last = Vec::basis(f5, 4, 3);
    auto p = asr_reduce(last);
    CHECK(asr_post(last, p));
    CHECK_THROWS_AS(asr_reduce(Vec(f5, {1, 0, 0, 1})), Error);

    Rng rng(23);
    for (Ring R : {Ring::prime_field(5), Ring::integers_mod(12), Ring::integers()})
      for (std::size_t l = R.is_finite() ? 2 : 3; l <= 4; ++l)
        for (int t = 0; t < 10; ++t) {
          Vec v = random_isotropic(rng, R, l);
          CHECK(split_quadratic(v) == 0);
          CHECK(asr_post(v, asr_reduce(v)));
        }
  }
}
