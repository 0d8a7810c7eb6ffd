// Exact rank of the orthogonality-preservation constraint system, used as an
// independent cross-check of the floating-point nullspace dimension. Every
// construction shipped here has amplitudes that are integers or roots of
// unity, so the real-linearized system embeds in a cyclotomic field and its
// rank can be computed by fraction-free integer elimination.
#pragma once

#include <optional>
#include <vector>

#include "nlops/bigint.hpp"
#include "nlops/certify.hpp"

namespace nlops {

// Thrown when an amplitude cannot be identified as an integer or a root of
// unity; the exact oracle is then honestly unavailable.
class OracleUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An amplitude recognized exactly: either a plain integer or zeta_order^power.
struct ExactAmp {
  bool is_root = false;
  long long integer = 0;
  int order = 1;
  int power = 0;
};

// Matches z against small integers and primitive k-th roots of unity for
// k <= max_order, within 1e-9 (double-precision amplitudes land within
// ~1e-15 of the exact value; distinct candidates are far apart).
std::optional<ExactAmp> recognize_amplitude(const Complex& z,
                                            int max_order = 64);

// Integer polynomials modulo the K-th cyclotomic polynomial: exact
// arithmetic in Z[zeta_K]. 4 | K so that i and complex conjugation are
// available inside the ring.
class CycloRing {
 public:
  using Elem = std::vector<BigInt>;  // power-basis coordinates, length degree()

  explicit CycloRing(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }

  Elem zero() const { return Elem(degree_); }
  Elem from_int(long long v) const;
  Elem root_power(long long t) const;  // zeta_K^t

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem conj(const Elem& a) const;  // zeta -> zeta^{K-1}
  bool is_zero(const Elem& a) const;

  // degree x degree integer matrix of multiplication by a, power basis;
  // column j holds the coordinates of a * zeta^j
  std::vector<Elem> mul_matrix(const Elem& a) const;

  // Kth cyclotomic polynomial, monic, ascending coefficients.
  static std::vector<BigInt> cyclotomic_polynomial(int k);

 private:
  int order_ = 0;
  int degree_ = 0;
  std::vector<BigInt> phi_;
  std::vector<Elem> zeta_pow_;  // zeta^t reduced, t = 0 .. order_-1

  Elem reduce(std::vector<BigInt> p) const;
};

// Rank over Q by fraction-free (Bareiss) elimination with implicit full
// pivoting; consumes the rows.
long bareiss_rank(std::vector<std::vector<BigInt>> rows, int cols);

// Exact rank of the real-linearized constraint matrix, rebuilt from the
// stored local vectors: amplitudes are recognized exactly, pair selection
// uses exact opposite-side overlaps, and the rank is computed over the
// smallest cyclotomic field containing all amplitudes (integer-only systems
// stay over Z). Throws OracleUnavailable when recognition fails.
long exact_rank_oracle(const ConstraintSystem& c);

// dim^2 - exact_rank_oracle(c).
long exact_nullspace_dim(const ConstraintSystem& c);

}  // namespace nlops
