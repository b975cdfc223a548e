#pragma once

// The polynomials P_{n,r} spanning F^n(P^W_{2n}) for A2, B2, G2, their
// recursions and closed forms, the sequence Phi_p, the very-singular
// classifiers and the singular-multiplicity reference lists.
//
// P_{n,r} live in ParamPoly with per-type variables:
//   A2: (hbar, -)      P_{n,r} = F^n(E^(n-3r) Q^(2r)),  F(Q^2) = E^2
//   B2: (k1, hbar)     P_{n,r} = F^n(E^(n-2r) Q^r),     F(Q) = -2(2k1+1) E
//   G2: (hbar, kappa)  P_{n,r} = F^n(Q^r E^(n-3r)),     F(Q) = kappa E^2
// with kappa = k2 - k1.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/scalars.hpp"
#include "cherednik/rootsys.hpp"

namespace cherednik {

// Names of the two table variables, for printing.
std::array<std::string, 2> table_variable_names(RootType type);

// Values of the table variables at an evaluated multiplicity.
std::pair<QuadExt, QuadExt> table_point(RootType type, const std::vector<Rat>& k);

// r ranges over 0..n/3 (A2, G2) or 0..n/2 (B2); outside that range the value
// is 0. A1 has no second generator and is rejected.
ParamPoly pnr(RootType type, int n, int r);
ParamPoly pnr_closed(RootType type, int n, int r);
// Direct Dunkl computation at an evaluated k, n <= 6, using the normalized
// second generator.
QuadExt pnr_direct(RootType type, int n, int r, const std::vector<Rat>& k);

// Scale c with Q = c * invariants[1] normalized as above (for A2, c^2 = 1 /
// lambda with F(Q2^2) = lambda E^2; the value returned is lambda).
QuadExt normalization_constant(RootType type);

// Phi_p in (hbar, kappa).
ParamPoly Phi(int p);
// phi_r(kappa) = Phi_r at hbar = -(3r - 1), as a polynomial in variable 0.
ParamPoly phi(int r);
// Conjectured closed form of phi_r.
ParamPoly phi_conjectured(int r);

struct ConjectureReport {
  int max_q = 0;
  int verified_up_to = -1;
  std::optional<int> first_failure;
};
ConjectureReport conjecture62_check(int q_max);

struct VerySingular {
  bool is_very_singular = false;
  std::optional<long> m;
  bool conditional = false;  // G2 decision through the phi_r branch
};
VerySingular very_singular(RootType type, const std::vector<Rat>& k);

// Finiteness of L(chi, k) for every irrep, from very_singular(k^tau) for
// one-dimensional tau; two-dimensional irreps are infinite.
struct TableEntry {
  std::string chi;
  bool finite = false;
  std::optional<long> m;
  bool conditional = false;
};
std::vector<TableEntry> finite_dim_table(RootType type, const std::vector<Rat>& k);

enum class SingularRef { singular, regular, not_covered };
std::string to_string(SingularRef s);
SingularRef singular_reference(RootType type, const std::vector<Rat>& k);

}  // namespace cherednik
