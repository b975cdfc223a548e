#pragma once

// Verma modules M(chi) = P (x) V_chi, the contravariant form, graded Gram
// matrices, graded dimensions of L(chi) and the finiteness criteria.
//
// Basis of M_n(chi): index b = i * dim(chi) + j for the monomial
// x1^(n-i) x2^i (x1^n only in rank 1) tensored with the j-th basis vector of
// V_chi.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/dunkl.hpp"
#include "cherednik/linalg.hpp"

namespace cherednik {

// dim M_n(chi).
std::size_t verma_dim(const RootSystem& rs, const Irrep& chi, int n);
std::size_t mono_index(const Mono& e);

// k-independent ingredients of the Dunkl operators M_n(chi) -> M_(n-1)(chi):
// T_(eps_d) = partial[d] + k1 * refl[d][0] + k2 * refl[d][1].
struct DegreePieces {
  int degree = 0;
  std::array<Matrix<QuadExt>, 2> partial;
  std::array<std::array<Matrix<QuadExt>, 2>, 2> refl;
};

// Process-wide caches (thread-safe).
const DegreePieces& degree_pieces(RootType type, const Irrep& chi, int n);
// W acting diagonally on M_n(chi); one matrix per element of W.
const std::vector<Matrix<QuadExt>>& verma_w_action(RootType type, const Irrep& chi, int n);

// Matrix of T_y on M_n(chi) -> M_(n-1)(chi), n >= 1.
template <class S>
Matrix<S> module_dunkl_matrix(RootType type, const Irrep& chi, int n, const Vec2& y,
                              const Multiplicity<S>& k);

// Matrix of F on M_n(chi) -> M_(n-2)(chi), n >= 2.
template <class S>
Matrix<S> module_F_matrix(RootType type, const Irrep& chi, int n, const Multiplicity<S>& k);

// Contravariant form (u, v) = (v_chi-component of sigma(p) v paired with u):
// for each term c x^e (x) e_j of u, apply T_{B(x1)}^e1 T_{B(x2)}^e2 to v and
// read the constant term of component j.
template <class S>
S contravariant_form(const RootSystem& rs, const Irrep& chi, const VermaVector<S>& u,
                     const VermaVector<S>& v, const Multiplicity<S>& k);

// Diagonal W-action on M(chi).
template <class S>
VermaVector<S> verma_act(const RootSystem& rs, const Irrep& chi, std::size_t w,
                         const VermaVector<S>& v);

// Gram matrices of successive degrees 0, 1, 2, ..., built by the recursion
// G_n[x_i p (x) e_j, c] = sum_b G_(n-1)[p (x) e_j, b] * T_{B(x_i)}[b, c].
template <class S>
class GramSequence {
 public:
  GramSequence(RootType type, const Irrep& chi, Multiplicity<S> k);
  int degree() const { return degree_; }
  const Matrix<S>& current() const { return gram_; }
  const Matrix<S>& advance();

 private:
  RootType type_;
  const Irrep* chi_;
  Multiplicity<S> k_;
  int degree_ = 0;
  Matrix<S> gram_;
};

struct GramReport {
  RootType type = RootType::A1;
  std::string chi;
  std::vector<Rat> k;  // per orbit; empty in symbolic mode
  bool symbolic = false;
  int degree = 0;
  std::size_t size = 0, rank = 0, nullity = 0;
  Matrix<QuadExt> evaluated;
  Matrix<ParamPoly> symbolic_matrix;
};

GramReport gram_evaluated(RootType type, const std::string& chi, const std::vector<Rat>& k,
                          int n);
// n <= 3; generic rank over K(k1, k2).
GramReport gram_symbolic(RootType type, const std::string& chi, int n);

struct GradedDims {
  std::vector<std::size_t> ranks;  // rank of the form on M_0, M_1, ...
  bool terminated = false;         // the last entry is a zero rank
  std::optional<std::size_t> total;
};

// Ranks for n = 0..N, stopping at the first zero.
GradedDims graded_dims(RootType type, const std::string& chi, const std::vector<Rat>& k, int N);

struct ClassifyResult {
  RootType type = RootType::A1;
  std::string chi;
  std::vector<Rat> k;  // per orbit
  bool finite = false;
  std::optional<long> m;
  std::optional<long> m0;  // -b_chi(k) when it is a non-negative integer
  Rat b_chi;
  std::vector<std::size_t> graded_dims;  // nonzero ranks only
  std::optional<std::size_t> dim;
  std::string criterion;  // "em", "gram-scan" or "both"

  friend bool operator==(const ClassifyResult&, const ClassifyResult&) = default;
};

// k has one entry per orbit; a single value is used for both orbits.
Multiplicity<QuadExt> multiplicity_from(const RootSystem& rs, const std::vector<Rat>& k);
std::vector<Rat> normalize_k(const RootSystem& rs, const std::vector<Rat>& k);

// Decides finiteness of L(chi) from m0 = -b_chi(k) and the vanishing of
// (E^(m0+1) v_chi, M_(2m0+2)(chi)[chi]).
ClassifyResult em_criterion(RootType type, const std::string& chi, const std::vector<Rat>& k);

// em_criterion cross-checked against the Gram scan up to 2 m0 + 4 (or
// default_bound when m0 is undefined). Disagreement, or a finite answer
// violating the sl(2) structure, throws invariant_violation.
ClassifyResult classify(RootType type, const std::string& chi, const std::vector<Rat>& k,
                        int default_bound = 10);

// Throws invariant_violation if the finite-module structure fails:
// 2m+1 graded pieces, palindromic, ends equal to dim chi, the degree-1
// piece equal to a* for triv when nonzero.
void check_finite_structure(const RootSystem& rs, const Irrep& chi, const ClassifyResult& r);

// For monomials p of degree n <= d, compares (-1)^n ad(F)^n(p) with
// sigma(p), the product of T_{B(x_i)} over the factors of p, as operators on
// P_{<=d} with symbolic k. `as_stated` tests equality; `factorial` tests
// (-1)^n ad(F)^n(p) = n! sigma(p), which is what holds for n >= 2 since
// ad(F)^n(x^n) = n! [F, x]^n.
enum class SigmaNormalization { as_stated, factorial };
bool sigma_adF_check(RootType type, int d,
                     SigmaNormalization norm = SigmaNormalization::as_stated);

}  // namespace cherednik
