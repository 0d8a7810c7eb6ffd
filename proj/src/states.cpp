#include "nlops/states.hpp"

#include <cmath>
#include <set>

namespace nlops {

const char* side_name(Side s) {
  switch (s) {
    case Side::A: return "A";
    case Side::B: return "B";
    case Side::Both: return "Both";
  }
  return "?";
}

double relative_overlap(const Vector& v, const Vector& w) {
  const double nv = v.norm();
  const double nw = w.norm();
  if (nv == 0.0 || nw == 0.0)
    throw std::invalid_argument("relative_overlap: zero local vector");
  return std::abs(inner_product(v, w)) / (nv * nw);
}

std::optional<Side> orthogonality_side(const ProductState& s,
                                       const ProductState& t, double tol) {
  const bool a0 = relative_overlap(s.a, t.a) <= tol;
  const bool b0 = relative_overlap(s.b, t.b) <= tol;
  if (a0 && b0) return Side::Both;
  if (a0) return Side::A;
  if (b0) return Side::B;
  return std::nullopt;
}

namespace {

bool finite_vector(const Vector& v) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (!std::isfinite(v[k].real()) || !std::isfinite(v[k].imag())) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_set(const StateSet& s, double tol) {
  ValidationReport rep;

  if (s.m < 1 || s.n < 1) rep.errors.push_back("dimensions must be positive");
  std::set<std::string> seen;
  for (int k = 0; k < s.size(); ++k) {
    const ProductState& st = s.states[k];
    if (st.a.size() != s.m || st.b.size() != s.n)
      rep.errors.push_back("state " + st.label + ": local dimension mismatch");
    if (st.a.size() == 0 || st.b.size() == 0 || st.a.norm() == 0.0 ||
        st.b.norm() == 0.0)
      rep.errors.push_back("state " + st.label + ": zero local vector");
    if (!finite_vector(st.a) || !finite_vector(st.b))
      rep.errors.push_back("state " + st.label + ": non-finite amplitude");
    if (!seen.insert(st.label).second)
      rep.errors.push_back("duplicate label " + st.label);
  }
  if (!rep.errors.empty()) {
    rep.valid = false;
    return rep;
  }

  for (int i = 0; i < s.size(); ++i) {
    for (int j = i + 1; j < s.size(); ++j) {
      PairVerdict pv;
      pv.i = i;
      pv.j = j;
      pv.side = orthogonality_side(s.states[i], s.states[j], tol);
      pv.residual = relative_overlap(s.states[i].a, s.states[j].a) *
                    relative_overlap(s.states[i].b, s.states[j].b);
      rep.max_residual = std::max(rep.max_residual, pv.residual);
      if (!pv.side) rep.violations.push_back(pv);
      rep.pairs.push_back(pv);
    }
  }
  rep.valid = rep.violations.empty();
  return rep;
}

void require_valid(const StateSet& s, double tol) {
  const ValidationReport rep = validate_set(s, tol);
  if (rep.valid) return;
  if (!rep.errors.empty())
    throw std::invalid_argument("invalid state set: " + rep.errors.front());
  const PairVerdict& pv = rep.violations.front();
  throw std::invalid_argument("invalid state set: states " +
                              s.states[pv.i].label + " and " +
                              s.states[pv.j].label +
                              " are orthogonal on neither side");
}

StateSet swap_parties(const StateSet& s) {
  StateSet out;
  out.m = s.n;
  out.n = s.m;
  out.family = s.family;
  out.states.reserve(s.states.size());
  for (const ProductState& st : s.states)
    out.states.push_back({st.label, st.b, st.a});
  return out;
}

StateSet normalized(const StateSet& s) {
  StateSet out = s;
  for (ProductState& st : out.states) {
    const double na = st.a.norm();
    const double nb = st.b.norm();
    if (na == 0.0 || nb == 0.0)
      throw std::invalid_argument("normalized: zero local vector");
    st.a /= na;
    st.b /= nb;
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector v(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    v.segment(i * b.size(), b.size()) = a[i] * b;
  return v;
}

}  // namespace nlops
