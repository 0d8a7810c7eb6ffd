#include "nlops/exact_rank.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace nlops {

namespace {

constexpr double kRecognizeTol = 1e-9;

int upper_index(int d, int p, int q) {
  return d + 2 * (p * (2 * d - p - 1) / 2 + (q - p - 1));
}

}  // namespace

std::optional<ExactAmp> recognize_amplitude(const Complex& z, int max_order) {
  ExactAmp out;
  if (std::abs(z.imag()) <= kRecognizeTol) {
    const double r = std::round(z.real());
    if (std::abs(z.real() - r) <= kRecognizeTol) {
      out.integer = static_cast<long long>(r);
      return out;
    }
  }
  // unit-modulus candidates e^{2 pi i t / k}, reported with gcd-reduced order
  if (std::abs(std::abs(z) - 1.0) > kRecognizeTol) return std::nullopt;
  for (int k = 3; k <= max_order; ++k) {
    for (int t = 1; t < k; ++t) {
      if (std::gcd(t, k) != 1) continue;  // reduced forms were tried earlier
      const double theta = 2.0 * std::numbers::pi * t / k;
      const Complex cand(std::cos(theta), std::sin(theta));
      if (std::abs(z - cand) <= kRecognizeTol) {
        out.is_root = true;
        out.order = k;
        out.power = t;
        return out;
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// cyclotomic ring

namespace {

using Poly = std::vector<BigInt>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// exact division by a monic divisor
Poly poly_div_exact_monic(Poly num, const Poly& den) {
  poly_trim(num);
  if (num.size() < den.size()) {
    if (num.empty()) return {};
    throw std::logic_error("cyclotomic: inexact polynomial division");
  }
  Poly q(num.size() - den.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt coef = num[i + den.size() - 1];
    q[i] = coef;
    if (coef.is_zero()) continue;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[i + j] -= coef * den[j];
  }
  poly_trim(num);
  if (!num.empty())
    throw std::logic_error("cyclotomic: inexact polynomial division");
  return q;
}

}  // namespace

std::vector<BigInt> CycloRing::cyclotomic_polynomial(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic order must be positive");
  if (k == 1) return {BigInt(-1), BigInt(1)};  // x - 1
  // (x^k - 1) / prod_{d | k, d < k} Phi_d
  Poly num(k + 1);
  num[0] = BigInt(-1);
  num[k] = BigInt(1);
  for (int d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    num = poly_div_exact_monic(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

CycloRing::CycloRing(int order) : order_(order) {
  if (order_ < 1) throw std::invalid_argument("CycloRing: order must be >= 1");
  phi_ = cyclotomic_polynomial(order_);
  degree_ = static_cast<int>(phi_.size()) - 1;
  zeta_pow_.resize(order_);
  for (int t = 0; t < order_; ++t) {
    Poly p(t + 1);
    p[t] = BigInt(1);
    zeta_pow_[t] = reduce(std::move(p));
  }
}

CycloRing::Elem CycloRing::reduce(Poly p) const {
  // phi_ is monic: x^degree == -sum_{j<degree} phi_[j] x^j
  for (std::size_t i = p.size(); i-- > static_cast<std::size_t>(degree_);) {
    BigInt coef = p[i];
    if (coef.is_zero()) continue;
    p[i] = BigInt(0);
    for (int j = 0; j < degree_; ++j)
      p[i - degree_ + j] -= coef * phi_[j];
  }
  p.resize(degree_);
  return p;
}

CycloRing::Elem CycloRing::from_int(long long v) const {
  Elem e = zero();
  if (degree_ > 0) e[0] = BigInt(v);
  return e;
}

CycloRing::Elem CycloRing::root_power(long long t) const {
  const long long r = ((t % order_) + order_) % order_;
  return zeta_pow_[static_cast<std::size_t>(r)];
}

CycloRing::Elem CycloRing::add(const Elem& a, const Elem& b) const {
  Elem out = a;
  for (int i = 0; i < degree_; ++i) out[i] += b[i];
  return out;
}

CycloRing::Elem CycloRing::sub(const Elem& a, const Elem& b) const {
  Elem out = a;
  for (int i = 0; i < degree_; ++i) out[i] -= b[i];
  return out;
}

CycloRing::Elem CycloRing::mul(const Elem& a, const Elem& b) const {
  Poly prod(2 * degree_ - 1);
  for (int i = 0; i < degree_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < degree_; ++j) {
      if (b[j].is_zero()) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  return reduce(std::move(prod));
}

CycloRing::Elem CycloRing::conj(const Elem& a) const {
  Elem out = zero();
  for (int t = 0; t < degree_; ++t) {
    if (a[t].is_zero()) continue;
    const Elem& z = root_power(static_cast<long long>(t) * (order_ - 1));
    for (int j = 0; j < degree_; ++j) out[j] += a[t] * z[j];
  }
  return out;
}

bool CycloRing::is_zero(const Elem& a) const {
  for (const BigInt& c : a)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<CycloRing::Elem> CycloRing::mul_matrix(const Elem& a) const {
  std::vector<Elem> cols(degree_);
  for (int j = 0; j < degree_; ++j) {
    Poly shifted(degree_ + j);
    for (int i = 0; i < degree_; ++i) shifted[i + j] = a[i];
    cols[j] = reduce(std::move(shifted));
  }
  return cols;
}

// ---------------------------------------------------------------------------
// fraction-free elimination

long bareiss_rank(std::vector<std::vector<BigInt>> rows, int cols) {
  // drop all-zero rows up front
  std::erase_if(rows, [](const std::vector<BigInt>& r) {
    for (const BigInt& v : r)
      if (!v.is_zero()) return false;
    return true;
  });

  const long nrows = static_cast<long>(rows.size());
  long rank = 0;
  long r = 0;
  BigInt prev(1);
  for (int c = 0; c < cols && r < nrows; ++c) {
    long pivot = -1;
    for (long rr = r; rr < nrows; ++rr) {
      if (!rows[rr][c].is_zero()) {
        pivot = rr;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    // a'_ij = (a_rc a_ij - a_ic a_rj) / prev; exact by Sylvester's identity
    for (long rr = r + 1; rr < nrows; ++rr) {
      for (int cc = c + 1; cc < cols; ++cc) {
        rows[rr][cc] =
            (rows[r][c] * rows[rr][cc] - rows[rr][c] * rows[r][cc])
                .exact_div(prev);
      }
      rows[rr][c] = BigInt(0);
    }
    prev = rows[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// oracle

namespace {

struct RecognizedSet {
  std::vector<std::vector<ExactAmp>> own, other;
  bool any_root = false;
  int field_order = 1;  // lcm of root orders
};

RecognizedSet recognize_all(const ConstraintSystem& c) {
  RecognizedSet rec;
  auto do_side = [&](const std::vector<Vector>& vs,
                     std::vector<std::vector<ExactAmp>>& out) {
    for (const Vector& v : vs) {
      std::vector<ExactAmp>& amps = out.emplace_back();
      for (Eigen::Index k = 0; k < v.size(); ++k) {
        auto amp = recognize_amplitude(v[k]);
        if (!amp)
          throw OracleUnavailable(
              "amplitude is not an integer or root of unity; exact oracle "
              "unavailable");
        if (amp->is_root) {
          rec.any_root = true;
          rec.field_order = std::lcm(rec.field_order, amp->order);
        }
        amps.push_back(*amp);
      }
    }
  };
  do_side(c.own, rec.own);
  do_side(c.other, rec.other);
  return rec;
}

// all-integer systems stay over Z: conjugation is trivial and the
// real/imaginary split has integer coefficients directly
long integer_rank(const ConstraintSystem& c, const RecognizedSet& rec) {
  const int d = c.dim;
  const int k = static_cast<int>(c.own.size());
  auto amp = [](const ExactAmp& a) { return BigInt(a.integer); };

  std::vector<std::vector<BigInt>> rows;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      BigInt overlap(0);
      for (std::size_t p = 0; p < rec.other[i].size(); ++p)
        overlap += amp(rec.other[i][p]) * amp(rec.other[j][p]);
      if (overlap.is_zero()) continue;

      std::vector<BigInt> re(d * d), im(d * d);
      for (int p = 0; p < d; ++p) re[p] = amp(rec.own[i][p]) * amp(rec.own[j][p]);
      for (int p = 0; p < d; ++p) {
        for (int q = p + 1; q < d; ++q) {
          const BigInt u = amp(rec.own[i][p]) * amp(rec.own[j][q]);
          const BigInt v = amp(rec.own[i][q]) * amp(rec.own[j][p]);
          const int col = upper_index(d, p, q);
          re[col] = u + v;
          im[col + 1] = u - v;
        }
      }
      rows.push_back(std::move(re));
      rows.push_back(std::move(im));
    }
  }
  return bareiss_rank(std::move(rows), d * d);
}

long cyclotomic_rank(const ConstraintSystem& c, const RecognizedSet& rec) {
  const int field_order = std::lcm(4, rec.field_order);
  if (field_order > 300)
    throw OracleUnavailable("root-of-unity orders too large for the oracle");
  const CycloRing ring(field_order);
  const int g = ring.degree();
  const int d = c.dim;
  const int k = static_cast<int>(c.own.size());

  using Elem = CycloRing::Elem;
  auto amp = [&](const ExactAmp& a) {
    if (!a.is_root) return ring.from_int(a.integer);
    return ring.root_power(static_cast<long long>(a.power) *
                           (field_order / a.order));
  };
  auto to_elems = [&](const std::vector<std::vector<ExactAmp>>& side) {
    std::vector<std::vector<Elem>> out;
    for (const auto& amps : side) {
      std::vector<Elem>& es = out.emplace_back();
      for (const ExactAmp& a : amps) es.push_back(amp(a));
    }
    return out;
  };
  const auto own = to_elems(rec.own);
  const auto other = to_elems(rec.other);
  const Elem i_unit = ring.root_power(field_order / 4);

  // two-real(z) = z + conj z;   two-imag(z) = -i (z - conj z)
  auto two_re = [&](const Elem& z) { return ring.add(z, ring.conj(z)); };
  auto two_im = [&](const Elem& z) {
    Elem w = ring.mul(i_unit, ring.sub(z, ring.conj(z)));
    for (BigInt& x : w) x.negate();
    return w;
  };

  std::vector<std::vector<Elem>> eqs;  // entries in Z[zeta], rows scaled by 2
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      Elem overlap = ring.zero();
      for (std::size_t p = 0; p < other[i].size(); ++p)
        overlap = ring.add(overlap,
                           ring.mul(ring.conj(other[i][p]), other[j][p]));
      if (ring.is_zero(overlap)) continue;

      std::vector<Elem> re(d * d, ring.zero()), im(d * d, ring.zero());
      for (int p = 0; p < d; ++p) {
        const Elem cp = ring.mul(ring.conj(own[i][p]), own[j][p]);
        re[p] = two_re(cp);
        im[p] = two_im(cp);
      }
      for (int p = 0; p < d; ++p) {
        for (int q = p + 1; q < d; ++q) {
          const Elem u = ring.mul(ring.conj(own[i][p]), own[j][q]);
          const Elem v = ring.mul(ring.conj(own[i][q]), own[j][p]);
          const Elem w = ring.add(u, v);
          const Elem z = ring.sub(u, v);
          const int col = upper_index(d, p, q);
          re[col] = two_re(w);
          Elem re_y = two_im(z);  // -2 Im(z) with flipped sign below
          for (BigInt& x : re_y) x.negate();
          re[col + 1] = std::move(re_y);
          im[col] = two_im(w);
          im[col + 1] = two_re(z);
        }
      }
      eqs.push_back(std::move(re));
      eqs.push_back(std::move(im));
    }
  }

  // blow each field entry up to its g x g integer multiplication block;
  // rank over Q of the blown-up matrix is g times the rank over Q(zeta)
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(eqs.size() * g);
  for (const std::vector<Elem>& eq : eqs) {
    std::vector<std::vector<Elem>> blocks;
    blocks.reserve(eq.size());
    for (const Elem& e : eq) blocks.push_back(ring.mul_matrix(e));
    for (int alpha = 0; alpha < g; ++alpha) {
      std::vector<BigInt> row(static_cast<std::size_t>(d) * d * g);
      for (int col = 0; col < d * d; ++col)
        for (int beta = 0; beta < g; ++beta)
          row[static_cast<std::size_t>(col) * g + beta] =
              blocks[col][beta][alpha];
      rows.push_back(std::move(row));
    }
  }

  const long blown = bareiss_rank(std::move(rows), d * d * g);
  if (blown % g != 0)
    throw std::logic_error("cyclotomic rank: blow-up rank not divisible");
  return blown / g;
}

}  // namespace

long exact_rank_oracle(const ConstraintSystem& c) {
  const RecognizedSet rec = recognize_all(c);
  if (!rec.any_root) return integer_rank(c, rec);
  return cyclotomic_rank(c, rec);
}

long exact_nullspace_dim(const ConstraintSystem& c) {
  return static_cast<long>(c.dim) * c.dim - exact_rank_oracle(c);
}

}  // namespace nlops
