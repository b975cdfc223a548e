#include <doctest.h>

#include "cherednik/checks.hpp"
#include "cherednik/polyalg.hpp"
#include "cherednik/rootsys.hpp"

using namespace cherednik;

TEST_CASE("monomial enumeration") {
  CHECK(monomials_of_degree(3, 2) == std::vector<Mono>{{3, 0}, {2, 1}, {1, 2}, {0, 3}});
  CHECK(monomials_of_degree(4, 1) == std::vector<Mono>{{4, 0}});
  CHECK(monomials_of_degree(0, 2).size() == 1);
}

TEST_CASE("canonical text is graded then lex") {
  const QPoly x = QPoly::variable(0), y = QPoly::variable(1);
  const QPoly p = y * y * QPoly::constant(QuadExt(Rat(-1, 2))) + x + QPoly::constant(QuadExt(3)) +
                  x * y * QPoly::constant(QuadExt::sqrt3());
  CHECK(p.str() == "3+x1+s3*x1*x2-1/2*x2^2");
  CHECK(QPoly().str() == "0");
}

TEST_CASE("ring axioms and Leibniz rule on random polynomials") {
  Rng rng(17);
  const RootSystem& rs = root_system(RootType::G2);
  for (int t = 0; t < 50; ++t) {
    const QPoly p = random_qpoly(rng, rs, 3), q = random_qpoly(rng, rs, 3),
                r = random_qpoly(rng, rs, 2);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q).degree() == p.degree() + q.degree());
    for (int i = 0; i < 2; ++i) CHECK((p * q).partial(i) == p.partial(i) * q + p * q.partial(i));
    const Vec2 y = random_vec(rng, rs);
    CHECK((p * q).directional(y) == p.directional(y) * q + p * q.directional(y));
  }
}

TEST_CASE("Weyl action is an algebra automorphism and a group action") {
  Rng rng(2);
  for (RootType type : kAllTypes) {
    const RootSystem& rs = root_system(type);
    for (int t = 0; t < 10; ++t) {
      const QPoly p = random_qpoly(rng, rs, 3), q = random_qpoly(rng, rs, 2);
      std::uniform_int_distribution<std::size_t> pick(0, rs.order() - 1);
      const std::size_t g = pick(rng), h = pick(rng);
      const Mat2& mg = rs.elements[g];
      const Mat2& mh = rs.elements[h];
      CHECK(weyl_act(mg, p * q) == weyl_act(mg, p) * weyl_act(mg, q));
      CHECK(weyl_act(mg, weyl_act(mh, p)) == weyl_act(mg * mh, p));
      CHECK(weyl_act(Mat2::identity(), p) == p);
      // A linear form with coordinates c goes to the form with coordinates g c.
      const Vec2 c = random_vec(rng, rs);
      CHECK(weyl_act(mg, QPoly::linear_form(c)) == QPoly::linear_form(mg.apply(c)));
    }
  }
}

TEST_CASE("division by a linear form") {
  Rng rng(6);
  const RootSystem& rs = root_system(RootType::A2);
  for (int t = 0; t < 30; ++t) {
    const QPoly p = random_qpoly(rng, rs, 3);
    for (const auto& a : rs.positive) {
      const QPoly l = QPoly::linear_form(a.root);
      CHECK(div_linear(l * p, a.root) == p);
    }
  }
  const QPoly one = QPoly::constant(QuadExt(1));
  CHECK_FALSE(try_div_linear(QPoly::variable(0) + one, Vec2{QuadExt(1), QuadExt(0)}).has_value());
  CHECK_FALSE(try_div_linear(QPoly::variable(1), Vec2{QuadExt(1), QuadExt(0)}).has_value());
}
