#pragma once

// Operator identities of the rational Cherednik algebra, checked exactly on
// graded pieces of P with symbolic k, plus small random generators. Each
// check returns an empty string on success and a description of the first
// counterexample otherwise.

#include <cstdint>
#include <random>
#include <string>

#include "cherednik/dunkl.hpp"

namespace cherednik {

using Rng = std::mt19937_64;

// Uniform rational p/q with |p| <= max_num, 1 <= q <= max_den.
Rat random_rat(Rng& rng, long max_num, long max_den);
// Random element of Q(sqrt 3); the sqrt 3 part is nonzero only when allowed.
QuadExt random_quadext(Rng& rng, bool with_sqrt3);
// Random vector of a (second slot zero in rank 1).
Vec2 random_vec(Rng& rng, const RootSystem& rs);
// Random polynomial of degree <= max_degree with constant coefficients.
KPoly random_kpoly(Rng& rng, const RootSystem& rs, int max_degree);
QPoly random_qpoly(Rng& rng, const RootSystem& rs, int max_degree);

// All monomials of degree <= d in rank(rs) variables.
std::vector<Mono> monomials_up_to(const RootSystem& rs, int d);

// [T_y, T_y'] p = 0 for `trials` random (y, y', p in P_{<=max_degree}).
std::string check_dunkl_commutativity(const RootSystem& rs, Rng& rng, int trials, int max_degree);

// T_y x - x T_y = <y, x> + 1/2 sum_{alpha in R} k_alpha <y, alpha><alpha^v, x> r_alpha
// on P_{<=max_degree}, y and x running over coordinate bases.
std::string check_relation1(const RootSystem& rs, int max_degree);

// w T_y w^-1 = T_{w(y)} on P_{<=max_degree} for all w and coordinate y.
std::string check_relation3(const RootSystem& rs, int max_degree);

// [H, E] = 2E, [H, F] = -2F and H = [E, F] = E(k) + g_k on P_{<=max_degree}.
std::string check_sl2(const RootSystem& rs, int max_degree);

// F commutes with W on P_{<=max_degree}.
std::string check_F_equivariance(const RootSystem& rs, int max_degree);

// F^(p+1)(E^(p+1)) = (-1)^(p+1) (p+1)! prod_{i=0}^p (hbar + i) for p <= p_max.
std::string check_power_contraction(const RootSystem& rs, int p_max);

}  // namespace cherednik
