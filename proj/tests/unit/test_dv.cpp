#include <doctest.h>

#include "chevdv/dv.hpp"
#include "chevdv/errors.hpp"
#include "chevdv/random.hpp"

using namespace chevdv;

TEST_SUITE("dv") {
  TEST_CASE("hypotheses") {
    CHECK(within_hypotheses(RootSystem::parse("B3"), Ring::integers()));
    CHECK(!within_hypotheses(RootSystem::parse("B2"), Ring::integers()));
    CHECK(within_hypotheses(RootSystem::parse("E6"), Ring::prime_field(2)));
    CHECK_THROWS_AS(parabolic_pair(RootSystem::parse("A3")), Error);
    CHECK(parabolic_pair(RootSystem::parse("C3")).i == 3);
    CHECK(parabolic_pair(RootSystem::parse("E6")).j == 6);
  }

  TEST_CASE("S tilde") {
    auto b3 = ChevalleySystem::parse("B3");
    const RootSystem& rs = b3->roots();
    Ring f5 = Ring::prime_field(5);
    CHECK(is_in_S_tilde(SteinbergWord(b3, f5)).in_S_tilde);
    // x_{-(a1+a2)}(1) moves v+ onto label 3.
    SteinbergWord a = SteinbergWord::single(b3, f5, rs.find({-1, -1, 0}), 1);
    auto wit = is_in_S_tilde(a);
    CHECK(!wit.in_S_tilde);
    CHECK(wit.required_zero == std::vector<int>{3});
    CHECK_THROWS_AS(is_in_S_tilde(SteinbergWord::single(b3, f5, rs.simple(3), 1)), Error);

    auto e6 = ChevalleySystem::parse("E6");
    Rng rng(6);
    const RootSystem& es = e6->roots();
    SteinbergWord up = random_word(rng, e6, f5, 10, [&](RootId r) { return es.is_positive(r) && es.coeff(r, 1) == 0; });
    CHECK(is_in_S_tilde(up).in_S_tilde);
  }

  TEST_CASE("Levi reduction") {
    auto b3 = ChevalleySystem::parse("B3");
    const RootSystem& rs = b3->roots();
    Ring f5 = Ring::prime_field(5);
    SteinbergWord a = SteinbergWord::single(b3, f5, rs.find({-1, -1, 0}), 2);
    Vec image = apply(a, b3->rep().highest_weight_vector(f5));
    CHECK(image[*b3->rep().index_of_label(3)] != 0);
    LeviReduction r = reduce_levi_part(a);
    CHECK(is_in_S_tilde(r.a_prime).in_S_tilde);
    CHECK(classify(r.x).in_U);
    CHECK(classify(r.y).in_Uminus);
    CHECK(classify(r.x).L(3));

    SteinbergWord ok(b3, f5);
    LeviReduction same = reduce_levi_part(ok);
    CHECK(same.x.empty());
    CHECK(same.y.empty());
  }

  TEST_CASE("factorize") {
    auto b3 = ChevalleySystem::parse("B3");
    Ring f5 = Ring::prime_field(5);
    SteinbergWord pos = SteinbergWord::single(b3, f5, b3->roots().find({0, 1, 1}), 3);
    DVDecomposition d = factorize_dv(pos);
    CHECK(d.u == pos);
    CHECK(d.v.empty());
    CHECK(d.a.empty());
    CHECK(d.p.empty());

    const std::vector<std::pair<std::string, std::string>> cases = {
        {"B3", "F5"}, {"B4", "Z/8"}, {"C3", "F7"}, {"E6", "F2"}, {"E7", "F3"}};
    for (const auto& [s, r] : cases) {
      auto sys = ChevalleySystem::parse(s);
      Ring R = Ring::parse(r);
      Rng rng(31);
      for (int t = 0; t < 5; ++t) {
        SteinbergWord w = random_word(rng, sys, R, 20);
        DVDecomposition dec = factorize_dv(w);
        std::string why;
        CHECK_MESSAGE(certify(dec, w, &why), s, "/", r, ": ", why);
        CHECK(dec.reduced);
      }
    }
  }

  TEST_CASE("over Z: certified or an overflow, never a wrong answer") {
    auto c3 = ChevalleySystem::parse("C3");
    Ring z = Ring::integers();
    Rng rng(5);
    int certified = 0;
    for (int t = 0; t < 20; ++t) {
      SteinbergWord w = random_word(rng, c3, z, 4);
      try {
        DVDecomposition d = factorize_dv(w);
        bool ok = certify(d, w);
        CHECK(ok);
        ++certified;
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Overflow);
      }
    }
    CHECK(certified > 10);
  }

  TEST_CASE("certify rejects a corrupted decomposition") {
    auto b3 = ChevalleySystem::parse("B3");
    Ring f5 = Ring::prime_field(5);
    Rng rng(2);
    SteinbergWord w = random_word(rng, b3, f5, 12);
    DVDecomposition d = factorize_dv(w);
    d.u.append(b3->roots().highest(), 1);
    CHECK(!certify(d, w));
    d = factorize_dv(w);
    d.a.append(b3->roots().simple(3), 1);
    std::string why;
    CHECK(!certify(d, w, &why));
    CHECK(why == "a is not in StL_i");
  }

  TEST_CASE("absorb_negative_simple") {
    auto e6 = ChevalleySystem::parse("E6");
    const RootSystem& rs = e6->roots();
    Ring f5 = Ring::prime_field(5);
    Rng rng(12);
    for (int t = 0; t < 5; ++t) {
      SteinbergWord w = random_word(rng, e6, f5, 15);
      DVDecomposition d = factorize_dv(w);
      CHECK(absorb_negative_simple(0, d).a == d.a);
      Int xi = random_nonzero(rng, f5);
      SteinbergWord g = SteinbergWord::single(e6, f5, rs.negate(rs.simple(1)), xi) * w;
      DVDecomposition e = absorb_negative_simple(xi, d);
      CHECK(certify(e, g));
      CHECK(e.a == d.a);
    }
  }

  TEST_CASE("dv_reduce") {
    for (const auto& [s, r] : std::vector<std::pair<std::string, std::string>>{{"B3", "F5"}, {"E6", "F2"}, {"C3", "Z/9"}}) {
      auto sys = ChevalleySystem::parse(s);
      const RootSystem& rs = sys->roots();
      Ring R = Ring::parse(r);
      ParabolicPair pp = parabolic_pair(rs);
      auto levi_j = [&](RootId a) { return rs.coeff(a, pp.j) == 0; };
      Rng rng(41);
      SteinbergWord plain = random_word(rng, sys, R, 6, levi_j);
      KernelSplit same = dv_reduce(plain);
      CHECK(same.a.empty());
      CHECK(same.b == plain);
      for (int t = 0; t < 5; ++t) {
        SteinbergWord w = random_relator(rng, sys, R) * random_word(rng, sys, R, 8, levi_j);
        KernelSplit ks = stab_kernel_express(w);
        CHECK(evaluate(ks.a) * evaluate(ks.b) == evaluate(w));
        CHECK(classify(ks.a).L(pp.i));
        CHECK(classify(ks.b).L(pp.j));
        CHECK(in_intersection_image(w, evaluate(ks.a)));
      }
      SteinbergWord bad = SteinbergWord::single(sys, R, rs.simple(pp.j), 1);
      CHECK_THROWS_AS(dv_reduce(bad), Error);
    }
    auto b3 = ChevalleySystem::parse("B3");
    KernelSplit e = stab_kernel_express(SteinbergWord(b3, Ring::prime_field(5)));
    CHECK(e.a.empty());
    CHECK(e.b.empty());
  }

  TEST_CASE("tilde generator") {
    Ring f7 = Ring::prime_field(7);
    for (Int xi = 0; xi < 7; ++xi) {
      TildeGenerator g = tilde_E_generator(Mat(f7, {{0, 1}, {0, 0}}), RingValue(f7, xi));
      CHECK(g.g == Mat(f7, {{1, 1 - xi}, {0, 1}}));
      CHECK(g.verify());
    }
    Ring z9 = Ring::integers_mod(9);
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
      Int x = random_element(rng, z9), xi = random_element(rng, z9);
      if (!z9.is_unit(1 + x * xi)) continue;
      CHECK(tilde_E_generator(Mat(z9, {{x}}), RingValue(z9, xi)).g.is_identity());
    }
    CHECK_THROWS_AS(tilde_E_generator(Mat(z9, {{2}}), RingValue(z9, 1)), Error);
  }
}
