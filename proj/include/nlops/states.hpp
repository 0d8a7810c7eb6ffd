// Core types for bipartite orthogonal product states: local vectors, product
// states, labeled state sets, and pairwise orthogonality tests.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlops {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Orthogonality decisions are made relative to the product of local norms,
// rank decisions relative to the largest singular value. The defaults are a
// validated pair: exact-zero overlaps of the constructions shipped here land
// below 1e-13 at double precision while the smallest true nonzero is >= 1.
inline constexpr double kOrthoTol = 1e-10;
inline constexpr double kRankTol = 1e-9;

// Side(s) on which a pair of product states is orthogonal.
enum class Side { A, B, Both };

const char* side_name(Side s);

struct ProductState {
  std::string label;
  Vector a;  // Alice factor, dimension m
  Vector b;  // Bob factor, dimension n
};

// Ordered collection of product states in C^m (x) C^n. States are stored
// unnormalized; normalization is an explicit transform, never implicit.
struct StateSet {
  int m = 0;
  int n = 0;
  std::vector<ProductState> states;
  std::string family;  // generator token, empty for ad-hoc sets

  int size() const { return static_cast<int>(states.size()); }
};

// Conjugate-linear in the first argument: sum_k conj(v_k) w_k.
template <typename D1, typename D2>
Complex inner_product(const Eigen::MatrixBase<D1>& v,
                      const Eigen::MatrixBase<D2>& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("inner_product: dimension mismatch");
  return v.dot(w);
}

// |<v|w>| / (||v|| ||w||).
double relative_overlap(const Vector& v, const Vector& w);

// A if only the Alice factors are orthogonal, B if only Bob's, Both if both,
// nullopt if neither. "Orthogonal" means relative overlap <= tol.
std::optional<Side> orthogonality_side(const ProductState& s,
                                       const ProductState& t,
                                       double tol = kOrthoTol);

struct PairVerdict {
  int i = 0, j = 0;  // 0-based state indices, i < j
  std::optional<Side> side;
  double residual = 0.0;  // product of the two relative overlaps
};

struct ValidationReport {
  bool valid = false;
  double max_residual = 0.0;
  std::vector<PairVerdict> pairs;       // every unordered pair
  std::vector<PairVerdict> violations;  // pairs orthogonal on neither side
  std::vector<std::string> errors;      // structural problems (labels, dims)
};

// Checks pairwise total orthogonality, label uniqueness, dimension and
// finiteness invariants. Invalid sets produce a report, not an exception.
ValidationReport validate_set(const StateSet& s, double tol = kOrthoTol);

// Throws std::invalid_argument (naming the first offending pair or error)
// when the set fails validation.
void require_valid(const StateSet& s, double tol = kOrthoTol);

// Exchanges the two parties: m <-> n and a <-> b per state.
StateSet swap_parties(const StateSet& s);

// Each local factor scaled to unit norm.
StateSet normalized(const StateSet& s);

// Joint-space vector a (x) b of dimension m*n.
Vector kron(const Vector& a, const Vector& b);

}  // namespace nlops
