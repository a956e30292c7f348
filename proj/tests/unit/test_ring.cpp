#include <doctest.h>

#include "chevdv/errors.hpp"
#include "chevdv/matrix.hpp"
#include "chevdv/unimodular.hpp"

using namespace chevdv;

TEST_SUITE("ring") {
  TEST_CASE("parse and name") {
    CHECK(Ring::parse("Z").name() == "Z");
    CHECK(Ring::parse("Z/12").name() == "Z/12");
    CHECK(Ring::parse("F7").name() == "F7");
    CHECK_THROWS_AS(Ring::parse("Q"), Error);
    CHECK_THROWS_AS(Ring::parse("F6"), Error);
    CHECK_THROWS_AS(Ring::parse("Z/0"), Error);
  }

  TEST_CASE("arithmetic and units") {
    Ring z8 = Ring::integers_mod(8);
    CHECK(z8.reduce(-1) == 7);
    CHECK(z8.is_unit(3));
    CHECK(!z8.is_unit(2));
    CHECK(z8.mul(3, z8.inverse(3)) == 1);
    Ring f5 = Ring::prime_field(5);
    for (Int a = 1; a < 5; ++a) CHECK(f5.mul(a, f5.inverse(a)) == 1);
    Ring z = Ring::integers();
    CHECK(z.is_unit(-1));
    CHECK(!z.is_unit(2));
    CHECK_THROWS_AS(z.inverse(2), Error);
  }

  TEST_CASE("declared stable ranks") {
    CHECK(Ring::integers().declared_sr() == 2);
    CHECK(Ring::integers().declared_asr() == 2);
    CHECK(Ring::prime_field(5).declared_sr() == 1);
    CHECK(Ring::integers_mod(12).declared_asr() == 1);
  }

  TEST_CASE("matrices") {
    Ring z = Ring::integers();
    Mat a(z, {{2, 1}, {1, 1}});
    CHECK(determinant(a) == 1);
    CHECK((a * inverse(a)).is_identity());
    Mat s(z, {{2, 0}, {0, 1}});
    CHECK_THROWS_AS(inverse(s), Error);
    Ring z9 = Ring::integers_mod(9);
    Mat b(z9, {{1, 3, 0}, {0, 2, 1}, {4, 0, 1}});
    CHECK((b * inverse(b)).is_identity());
    CHECK(flip_matrix(z, 3) * flip_matrix(z, 3) == Mat::identity(z, 3));
  }
}

TEST_SUITE("unimodular") {
  TEST_CASE("unimodularity") {
    Ring z = Ring::integers();
    CHECK(is_unimodular(Vec(z, {2, 3})));
    CHECK(!is_unimodular(Vec(z, {0, 0, 0})));
    CHECK(!is_unimodular(Vec(Ring::prime_field(5), {0, 0})));
    CHECK(is_unimodular(Vec(z, {6, 10, 15})));
    CHECK(!is_unimodular(Vec(z, {4, 6})));
    CHECK(is_unimodular(Vec(Ring::integers_mod(12), {4, 3})));
  }

  TEST_CASE("certificates") {
    Ring z = Ring::integers();
    CHECK(unimodular_certificate(Vec(z, {2, 3})) == Vec(z, {2, -1}));
    CHECK(unimodular_certificate(Vec(z, {1, 0})) == Vec(z, {1, 0}));
    CHECK(unimodular_certificate(Vec(z, {6, 10, 15})) == Vec(z, {16, -8, -1}));
    Ring z8 = Ring::integers_mod(8);
    CHECK(unimodular_certificate(Vec(z8, {3, 0})) == Vec(z8, {3, 0}));
    CHECK_THROWS_AS(unimodular_certificate(Vec(z, {4, 6})), Error);
    Vec v(Ring::integers_mod(12), {8, 9, 6});
    CHECK(dot(unimodular_certificate(v), v) == 1);
  }

  TEST_CASE("stabilize_column") {
    Ring z = Ring::integers();
    CHECK(stabilize_column(Vec(z, {1, 0, 0, 7})) == Vec(z, {0, 0, 0}));
    CHECK(stabilize_column(Vec(z, {6, 10, 15})) == Vec(z, {1, 0}));
    Ring f5 = Ring::prime_field(5);
    CHECK(stabilize_column(Vec(f5, {0, 0, 1})) == Vec(f5, {1, 0}));
    CHECK_THROWS_AS(stabilize_column(Vec(z, {2, 4, 6})), Error);
  }

  TEST_CASE("ell ideal") {
    Ring z = Ring::integers();
    CHECK(ell_ideal(Vec(z, {4, 6})).generator == 2);
    CHECK(ell_ideal(Vec(z, {12, 0})).generator == 6);
    CHECK(ell_ideal(Vec(z, {2, 3})).is_unit());
    CHECK(ell_ideal(Vec(Ring::prime_field(5), {0})).is_zero());
    CHECK(ell_ideal(Vec(Ring::integers_mod(12), {4})).generator == 2);
  }
}
