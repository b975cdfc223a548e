#pragma once

// Irreducible representations of the rank <= 2 Weyl groups, realized by
// orthogonal matrices over Q(sqrt 3), so the invariant form on V_chi is the
// standard dot product and v_chi is the first basis vector.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cherednik/linalg.hpp"
#include "cherednik/rootsys.hpp"

namespace cherednik {

struct Irrep {
  std::string label;
  int dim = 1;
  std::vector<Matrix<QuadExt>> rho;  // one matrix per element of W
  std::vector<QuadExt> character;    // trace per element
  // Character value on a reflection of each orbit (short, long).
  std::array<int, 2> reflection_character{0, 0};
};

// Complete list in a fixed order:
//   A1: triv, sgn
//   A2: triv, sgn, std
//   B2: triv, sgn, std, chi1, chi2   (chi1 = -1 on short, +1 on long reflections)
//   G2: triv, sgn, tau, sgn_tau, std, std_tau   (tau = +1 short, -1 long)
std::vector<Irrep> build_irreps(const RootSystem& rs);

// Cached, validated on first use.
const std::vector<Irrep>& irreps(RootType type);
const Irrep& irrep(RootType type, std::string_view label);

// Throws invariant_violation if homomorphism, orthogonality, character
// orthogonality or completeness fails.
void validate_irreps(const RootSystem& rs, const std::vector<Irrep>& reps);

// e_chi = (chi(1)/|W|) sum_w chi(w^-1) action[w]. `action` holds one matrix
// per element of W; a homomorphism spot-check rejects non-representations.
Matrix<QuadExt> isotypic_projector(const RootSystem& rs, const Irrep& chi,
                                   const std::vector<Matrix<QuadExt>>& action);

// Conjugacy classes in order of first appearance in RootSystem::elements.
// `name` spells the representative in the simple reflections ("e", "s1s2").
struct ConjugacyClass {
  std::size_t representative = 0;
  std::size_t size = 0;
  std::string name;
};
std::vector<ConjugacyClass> conjugacy_classes(const RootSystem& rs);

// Regular representation of W (permutation matrices on the group basis).
std::vector<Matrix<QuadExt>> regular_representation(const RootSystem& rs);

// Multiplicity per orbit (short, long).
template <class S>
using Multiplicity = std::array<S, 2>;

// k^tau(alpha) = tau(r_alpha) k_alpha for a one-dimensional tau.
template <class S>
Multiplicity<S> twist_multiplicity(const Irrep& tau, const Multiplicity<S>& k) {
  if (tau.dim != 1) throw algebra_error("twist requires a one-dimensional character");
  Multiplicity<S> out = k;
  for (int i = 0; i < 2; ++i)
    if (tau.reflection_character[i] < 0) out[i] = -out[i];
  return out;
}

// Label of chi (x) tau, found by comparing characters.
const Irrep& tensor_with(RootType type, const Irrep& chi, const Irrep& tau);

}  // namespace cherednik
