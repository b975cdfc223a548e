#include <doctest.h>

#include <cmath>

#include "cherednik/checks.hpp"
#include "cherednik/scalars.hpp"

using namespace cherednik;

namespace {

double approx(const QuadExt& q) {
  return q.rational_part().to_double() + q.sqrt3_part().to_double() * std::sqrt(3.0);
}

ParamPoly random_param(Rng& rng) {
  ParamPoly p;
  std::uniform_int_distribution<int> deg(0, 3);
  for (int i = 0; i < 4; ++i) p.add_term({deg(rng), deg(rng)}, random_quadext(rng, true));
  return p;
}

}  // namespace

TEST_CASE("Rat parses canonical p/q and rejects malformed input") {
  CHECK(Rat::parse("-6/4") == Rat(-3, 2));
  CHECK(Rat::parse("+7") == Rat(7));
  CHECK(Rat::parse("0/5").is_zero());
  CHECK(Rat::parse("-6/4").str() == "-3/2");
  CHECK(Rat::parse("123456789012345678901234567890/2").str() == "61728394506172839450617283945");
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", " 1", "--1", "1/-2", "a", "1e3"})
    CHECK_THROWS_AS(Rat::parse(bad), parse_error);
}

TEST_CASE("Rat arithmetic and ordering") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) < Rat(2, 3));
  CHECK(Rat(-4, 2).to_long() == -2);
  CHECK_FALSE(Rat(1, 2).to_long().has_value());
  CHECK(Rat(-3, 4).abs() == Rat(3, 4));
  CHECK_THROWS_AS(Rat(0).inv(), algebra_error);
  CHECK_THROWS_AS(Rat(1, 0), algebra_error);
}

TEST_CASE("Q(sqrt3) is a field: random identities against a floating-point oracle") {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const QuadExt x = random_quadext(rng, true), y = random_quadext(rng, true),
                  z = random_quadext(rng, true);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x.norm() * y.norm() == (x * y).norm());
    CHECK(std::abs(approx(x * y) - approx(x) * approx(y)) < 1e-9);
    if (!x.is_zero()) {
      CHECK(x * x.inv() == QuadExt(1));
      const double ax = approx(x);
      CHECK(x.sign() == (ax > 0 ? 1 : -1));
    }
  }
  CHECK(QuadExt::sqrt3() * QuadExt::sqrt3() == QuadExt(3));
  CHECK(QuadExt(0).sign() == 0);
  CHECK_THROWS_AS(QuadExt(0).inv(), algebra_error);
}

TEST_CASE("Q(sqrt3) printing and parsing") {
  CHECK(QuadExt(Rat(1, 2), Rat(-3)).str() == "1/2-3*s3");
  CHECK(QuadExt(Rat(0), Rat(2, 3)).str() == "2/3*s3");
  CHECK(QuadExt(Rat(-5)).str() == "-5");
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const QuadExt x = random_quadext(rng, true);
    CHECK(QuadExt::parse(x.str()) == x);
  }
  CHECK(QuadExt::parse("(1+s3)^2") == QuadExt(Rat(4), Rat(2)));
  CHECK_THROWS_AS(QuadExt::parse("k1"), parse_error);
  CHECK_THROWS_AS(QuadExt::parse("1+"), parse_error);
}

TEST_CASE("ParamPoly ring identities and evaluation homomorphism") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const ParamPoly p = random_param(rng), q = random_param(rng), r = random_param(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == ParamPoly());
    const QuadExt u = random_quadext(rng, true), v = random_quadext(rng, true);
    CHECK((p * q).eval(u, v) == p.eval(u, v) * q.eval(u, v));
    CHECK((p + q).eval(u, v) == p.eval(u, v) + q.eval(u, v));
    if (!q.is_zero()) {
      const auto quotient = divide_exact(p * q, q);
      REQUIRE(quotient.has_value());
      CHECK(*quotient == p);
    }
  }
}

TEST_CASE("ParamPoly canonical text and parsing round trip") {
  const ParamPoly k1 = ParamPoly::var(0), k2 = ParamPoly::var(1);
  const ParamPoly p = (k1 + ParamPoly(1)) * (k1 - k2 * QuadExt(Rat(1, 2)));
  CHECK(p.str() == "k1-1/2*k2+k1^2-1/2*k1*k2");
  CHECK(ParamPoly::parse(p.str()) == p);
  CHECK((k1 * QuadExt(Rat(1), Rat(2))).str() == "(1+2*s3)*k1");
  CHECK(ParamPoly::parse("(1+2*s3)*k1") == k1 * QuadExt(Rat(1), Rat(2)));
  CHECK(ParamPoly::parse("h^2-1", {"h", "kappa"}) == k1 * k1 - ParamPoly(1));
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const ParamPoly q = random_param(rng);
    CHECK(ParamPoly::parse(q.str()) == q);
  }
  CHECK_THROWS_AS(ParamPoly::parse("k1/k2"), parse_error);
  CHECK_THROWS_AS(ParamPoly::parse("k3"), parse_error);
  CHECK_THROWS_AS(ParamPoly::parse("(k1"), parse_error);
}

TEST_CASE("divide_exact detects non-divisibility; substitute is a ring map") {
  const ParamPoly k1 = ParamPoly::var(0), k2 = ParamPoly::var(1);
  CHECK_FALSE(divide_exact(k1 * k1 + ParamPoly(1), k1 + ParamPoly(1)).has_value());
  CHECK(divide_exact(k1 * k1 - ParamPoly(1), k1 + ParamPoly(1)) == k1 - ParamPoly(1));
  const ParamPoly p = k1 * k2 + k2.pow(3);
  const ParamPoly s = p.substitute(k1 + k2, k1 - k2);
  CHECK(s == (k1 + k2) * (k1 - k2) + (k1 - k2).pow(3));
}
