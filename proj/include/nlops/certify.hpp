// Decides whether every orthogonality-preserving first-round measurement on
// one party is trivial (proportional to the identity). The constraints
// <a_i|H|a_j> = 0, taken over ordered pairs whose opposite-side overlap is
// nonzero, form a real-linear system on the Hermitian operator H = M^dag M;
// a one-dimensional solution space (the identity alone) certifies that the
// party cannot start a useful protocol.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nlops/states.hpp"

namespace nlops {

enum class Party { Alice, Bob };

const char* party_name(Party p);

// Real-linearized constraint system over the Hermitian coordinate vector.
// Coordinates: d diagonal entries, then (sqrt(2) Re H_pq, sqrt(2) Im H_pq)
// per strict-upper pair (p, q) in row-major order, so the Euclidean norm of
// a coordinate vector equals the Frobenius norm of the operator.
struct ConstraintSystem {
  Party party = Party::Alice;
  int dim = 0;                               // operator dimension d
  Eigen::MatrixXd rows;                      // R x d^2 real coefficients
  std::vector<std::pair<int, int>> sources;  // ordered state pair per complex
                                             // equation (two rows each)
  std::vector<Vector> own;    // measured party's local factors
  std::vector<Vector> other;  // opposite party's local factors
};

// Hermitian coordinate coding used by ConstraintSystem.
Eigen::VectorXd pack_hermitian(const Matrix& h);
Matrix unpack_hermitian(const Eigen::VectorXd& x, int d);

// Emits both orders (i, j) and (j, i) for every pair whose opposite-side
// overlap exceeds tol (relative); the redundancy is harmless for the rank.
// Throws on invalid sets.
ConstraintSystem assemble_constraints(const StateSet& s, Party party,
                                      double tol = kOrthoTol);

// Frobenius-orthonormal Hermitian basis of {H : all constraint rows vanish}.
// Rank is decided by SVD with threshold rank_tol relative to the largest
// singular value.
std::vector<Matrix> nullspace_basis(const ConstraintSystem& c,
                                    double rank_tol = kRankTol);

struct PartyAnalysis {
  Party party = Party::Alice;
  int nullspace_dim = 0;
  bool trivial_only = false;
  // Norm of the projection of I/sqrt(d) onto the nullspace; equals the
  // overlap with the single basis element in the trivial-only case.
  double identity_overlap = 0.0;
  // Largest |<a_i|H|a_j> <b_i|b_j>| over ordered pairs and returned operators.
  double max_residual = 0.0;
  // Unit-Frobenius, traceless; present iff the verdict is nontrivial-exists.
  std::optional<Matrix> witness;
};

// Throws std::logic_error if the solution space comes out empty: the identity
// always satisfies the constraints of a valid set, so dimension zero signals
// a bug or a non-orthogonal input.
PartyAnalysis analyze_party(const StateSet& s, Party party,
                            double tol = kOrthoTol,
                            double rank_tol = kRankTol);

struct NonlocalityReport {
  PartyAnalysis alice;
  PartyAnalysis bob;
  bool certified_nonlocal = false;
};

// certified_nonlocal is true iff both parties are trivial-only. This is a
// one-sided certificate: a nontrivial solution does not by itself prove
// that the set is locally distinguishable.
NonlocalityReport certify_nonlocal(const StateSet& s, double tol = kOrthoTol,
                                   double rank_tol = kRankTol);

// Turns a traceless witness into an explicit two-outcome measurement
// (E, I - E) with 0 <= E <= I, E = (w + lambda I)/c, lambda = max(0,
// -lambda_min(w)), c = lambda_max(w) + lambda. Both outcomes lie in
// span{w, I} and hence satisfy every constraint w does. Throws when w is
// proportional to the identity.
std::pair<Matrix, Matrix> witness_to_povm(const Matrix& w);

}  // namespace nlops
