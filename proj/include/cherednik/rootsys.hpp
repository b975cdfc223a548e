#pragma once

// Root systems of type A1, A2, B2, G2 and their Weyl groups.
//
// Coordinates: a* has basis x1, x2 (x1 only in rank 1), orthonormal for the
// Euclidean form in which the roots below are written; a carries the dual
// basis, so <y, x> is the coordinate dot product and the Weyl matrices act
// by the same orthogonal matrices on a and on a*.
//
//   A1: alpha = x1
//   A2: short roots at 0, 60, 120 degrees, unit length (needs sqrt 3)
//   B2: R+ = {x1, x2, x1 + x2, x1 - x2}
//   G2: short roots of length 1 at 0, 60, 120 degrees, long roots of
//       length sqrt 3 at 30, 90, 150 degrees
//
// Orbit 0 holds the short roots (multiplicity k1), orbit 1 the long ones
// (k2); A1 and A2 only have orbit 0.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cherednik/polyalg.hpp"
#include "cherednik/scalars.hpp"
#include "cherednik/vec2.hpp"

namespace cherednik {

enum class RootType { A1, A2, B2, G2 };

std::string type_label(RootType t);
RootType parse_root_type(std::string_view label);
inline constexpr std::array<RootType, 4> kAllTypes{RootType::A1, RootType::A2, RootType::B2,
                                                   RootType::G2};

struct PositiveRoot {
  Vec2 root;               // in a*
  Vec2 coroot;             // in a, <coroot, root> = 2
  int orbit = 0;           // 0 = short, 1 = long
  std::size_t reflection;  // index of r_alpha in RootSystem::elements
};

class RootSystem {
 public:
  RootType type = RootType::A1;
  int rank = 1;
  std::vector<PositiveRoot> positive;
  std::vector<std::size_t> simple;  // indices into positive

  // Weyl group, enumerated breadth-first from the simple reflections;
  // elements[0] is the identity. words[i] spells elements[i] as a product of
  // simple reflections (indices into `simple`), leftmost factor first.
  std::vector<Mat2> elements;
  std::vector<std::vector<int>> words;
  std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of g_i g_j
  std::vector<std::size_t> inverse;

  int num_orbits = 1;
  std::array<int, 2> orbit_size{0, 0};  // |R_i+|
  std::vector<int> degrees;             // primitive degrees d_1 <= ... <= d_rank

  // B*(x_i, x_j) = sum over all roots of <a^v, x_i><a^v, x_j>, and its
  // inverse; entries outside the rank x rank block are zero.
  Mat2 metric;
  Mat2 metric_inv;

  // Generators of P^W: invariants[0] = E = 1/2 sum z_i^2 for a B*-orthonormal
  // frame z; invariants[1] (rank 2) the higher-degree generator.
  std::vector<QPoly> invariants;

  std::size_t order() const { return elements.size(); }
  std::size_t index_of(const Mat2& g) const;
  std::vector<Vec2> all_roots() const;
};

RootSystem build_root_system(RootType type);

// Process-wide immutable instance, validated on first use.
const RootSystem& root_system(RootType type);

// Throws invariant_violation when a structural property fails: group
// closure, involutive reflections fixing their hyperplane, <a^v, a> = 2,
// W-stability of R and of the orbits, metric symmetry / positivity /
// W-invariance, invariance of the generators.
void validate_root_system(const RootSystem& rs);

QuadExt metric_form(const RootSystem& rs, const Vec2& x, const Vec2& z);
// B : a* -> a with <B(x), z> = B*(x, z), and its inverse.
Vec2 b_map(const RootSystem& rs, const Vec2& x);
Vec2 b_inv(const RootSystem& rs, const Vec2& y);

Mat2 reflection_matrix(const Vec2& alpha);

}  // namespace cherednik
