#include "nlops/bigint.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace nlops {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;
}  // namespace

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  // avoid overflow on LLONG_MIN
  u64 mag = v > 0 ? static_cast<u64>(v) : ~static_cast<u64>(v) + 1;
  mag_.push_back(mag);
}

void BigInt::trim(std::vector<u64>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int BigInt::cmp_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<u64> BigInt::add_mag(const std::vector<u64>& a,
                                 const std::vector<u64>& b) {
  const std::vector<u64>& lo = a.size() < b.size() ? a : b;
  const std::vector<u64>& hi = a.size() < b.size() ? b : a;
  std::vector<u64> out(hi.size() + 1, 0);
  u64 carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    u128 s = static_cast<u128>(hi[i]) + (i < lo.size() ? lo[i] : 0) + carry;
    out[i] = static_cast<u64>(s);
    carry = static_cast<u64>(s >> 64);
  }
  out[hi.size()] = carry;
  trim(out);
  return out;
}

std::vector<u64> BigInt::sub_mag(const std::vector<u64>& a,
                                 const std::vector<u64>& b) {
  std::vector<u64> out(a.size(), 0);
  u64 borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    u128 bi = static_cast<u128>(i < b.size() ? b[i] : 0) + borrow;
    if (static_cast<u128>(a[i]) >= bi) {
      out[i] = static_cast<u64>(static_cast<u128>(a[i]) - bi);
      borrow = 0;
    } else {
      out[i] = static_cast<u64>((static_cast<u128>(1) << 64) + a[i] - bi);
      borrow = 1;
    }
  }
  trim(out);
  return out;
}

std::vector<u64> BigInt::mul_mag(const std::vector<u64>& a,
                                 const std::vector<u64>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    u64 carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      u128 cur = static_cast<u128>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<u64>(cur);
      carry = static_cast<u64>(cur >> 64);
    }
    out[i + b.size()] += carry;
  }
  trim(out);
  return out;
}

// Knuth algorithm D, base 2^64.
std::vector<u64> BigInt::divmod_mag(const std::vector<u64>& u,
                                    const std::vector<u64>& v,
                                    std::vector<u64>& rem) {
  if (v.empty()) throw std::logic_error("BigInt: division by zero");
  if (cmp_mag(u, v) < 0) {
    rem = u;
    return {};
  }
  if (v.size() == 1) {
    std::vector<u64> q(u.size(), 0);
    u128 r = 0;
    for (std::size_t i = u.size(); i-- > 0;) {
      u128 cur = (r << 64) | u[i];
      q[i] = static_cast<u64>(cur / v[0]);
      r = cur % v[0];
    }
    trim(q);
    rem.clear();
    if (r != 0) rem.push_back(static_cast<u64>(r));
    return q;
  }

  const int shift = std::countl_zero(v.back());
  const std::size_t nn = v.size();
  // normalized copies: vn top limb has its high bit set
  std::vector<u64> vn(nn), un(u.size() + 1, 0);
  for (std::size_t i = nn; i-- > 0;) {
    vn[i] = v[i] << shift;
    if (shift && i > 0) vn[i] |= v[i - 1] >> (64 - shift);
  }
  for (std::size_t i = u.size(); i-- > 0;) {
    if (shift) {
      un[i + 1] |= u[i] >> (64 - shift);
      un[i] = u[i] << shift;
    } else {
      un[i] = u[i];
    }
  }

  const std::size_t mm = u.size() - nn;
  std::vector<u64> q(mm + 1, 0);
  for (std::size_t j = mm + 1; j-- > 0;) {
    u128 top = (static_cast<u128>(un[j + nn]) << 64) | un[j + nn - 1];
    u128 qhat = top / vn[nn - 1];
    u128 rhat = top % vn[nn - 1];
    const u128 base = static_cast<u128>(1) << 64;
    while (qhat >= base ||
           qhat * vn[nn - 2] > ((rhat << 64) | un[j + nn - 2])) {
      --qhat;
      rhat += vn[nn - 1];
      if (rhat >= base) break;
    }
    // multiply-subtract qhat * vn from un[j .. j+nn]
    u128 borrow = 0, carry = 0;
    for (std::size_t i = 0; i < nn; ++i) {
      u128 p = qhat * vn[i] + carry;
      carry = p >> 64;
      u64 plo = static_cast<u64>(p);
      u128 sub = static_cast<u128>(un[i + j]) - plo - borrow;
      un[i + j] = static_cast<u64>(sub);
      borrow = (sub >> 64) ? 1 : 0;
    }
    u128 sub = static_cast<u128>(un[j + nn]) - carry - borrow;
    un[j + nn] = static_cast<u64>(sub);
    if (sub >> 64) {
      // qhat was one too large: add back
      --qhat;
      u128 c2 = 0;
      for (std::size_t i = 0; i < nn; ++i) {
        u128 s = static_cast<u128>(un[i + j]) + vn[i] + c2;
        un[i + j] = static_cast<u64>(s);
        c2 = s >> 64;
      }
      un[j + nn] = static_cast<u64>(un[j + nn] + c2);
    }
    q[j] = static_cast<u64>(qhat);
  }
  trim(q);

  // denormalize remainder
  rem.assign(nn, 0);
  for (std::size_t i = 0; i < nn; ++i) {
    rem[i] = un[i] >> shift;
    if (shift && i + 1 < un.size()) rem[i] |= un[i + 1] << (64 - shift);
  }
  trim(rem);
  return q;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt& BigInt::negate() {
  sign_ = -sign_;
  return *this;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt r;
  if (a.sign_ == b.sign_) {
    r.sign_ = a.sign_;
    r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    return r;
  }
  const int c = BigInt::cmp_mag(a.mag_, b.mag_);
  if (c == 0) return BigInt();
  if (c > 0) {
    r.sign_ = a.sign_;
    r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
  } else {
    r.sign_ = b.sign_;
    r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
  }
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  BigInt r;
  r.sign_ = a.sign_ * b.sign_;
  r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  return r;
}

BigInt BigInt::exact_div(const BigInt& d) const {
  if (d.sign_ == 0) throw std::logic_error("BigInt: division by zero");
  if (sign_ == 0) return BigInt();
  std::vector<u64> rem;
  BigInt q;
  q.mag_ = divmod_mag(mag_, d.mag_, rem);
  if (!rem.empty()) throw std::logic_error("BigInt: inexact division");
  q.sign_ = q.mag_.empty() ? 0 : sign_ * d.sign_;
  return q;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  const int c = BigInt::cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<u64> cur = mag_;
  std::string digits;
  while (!cur.empty()) {
    // peel off base-10^19 chunks, least significant first
    constexpr u64 chunk = 10000000000000000000ULL;
    u128 r = 0;
    for (std::size_t i = cur.size(); i-- > 0;) {
      u128 v = (r << 64) | cur[i];
      cur[i] = static_cast<u64>(v / chunk);
      r = v % chunk;
    }
    trim(cur);
    u64 part = static_cast<u64>(r);
    const bool last = cur.empty();
    for (int k = 0; k < 19; ++k) {
      digits.push_back(static_cast<char>('0' + part % 10));
      part /= 10;
      if (last && part == 0) break;
    }
  }
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

long long BigInt::to_ll() const {
  constexpr u64 pos_max = static_cast<u64>(std::numeric_limits<long long>::max());
  if (sign_ == 0) return 0;
  if (mag_.size() > 1) throw std::overflow_error("BigInt: out of long long range");
  const u64 v = mag_[0];
  if (sign_ > 0) {
    if (v > pos_max) throw std::overflow_error("BigInt: out of long long range");
    return static_cast<long long>(v);
  }
  if (v > pos_max + 1) throw std::overflow_error("BigInt: out of long long range");
  return static_cast<long long>(-static_cast<__int128>(v));
}

}  // namespace nlops
