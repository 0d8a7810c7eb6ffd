#include "nlops/families.hpp"

#include <cmath>
#include <numbers>

namespace nlops {

namespace {

Complex root_of_unity(int k, long power) {
  // exp(2*pi*i*power/k), reduced first so large powers stay accurate
  const long r = ((power % k) + k) % k;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == k) return {-1.0, 0.0};
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) / k;
  return {std::cos(theta), std::sin(theta)};
}

Vector basis_ket(int dim, int j) {
  Vector v = Vector::Zero(dim);
  v[j] = 1.0;
  return v;
}

// |lo> + sign |lo+1>
Vector domino(int dim, int lo, int sign) {
  Vector v = Vector::Zero(dim);
  v[lo] = 1.0;
  v[lo + 1] = sign;
  return v;
}

// sum_{j=0}^{len-1} omega_k^{t j} |j + shift>
Vector fourier_row(int dim, int len, int shift, int k, int t) {
  Vector v = Vector::Zero(dim);
  for (int j = 0; j < len; ++j)
    v[j + shift] = root_of_unity(k, static_cast<long>(t) * j);
  return v;
}

StateSet make_set(int m, int n, FamilyId f,
                  std::vector<std::pair<Vector, Vector>> parts) {
  StateSet s;
  s.m = m;
  s.n = n;
  s.family = std::string(family_token(f));
  int k = 0;
  for (auto& [a, b] : parts) {
    ++k;
    s.states.push_back({"phi" + std::to_string(k), std::move(a), std::move(b)});
  }
  return s;
}

StateSet gen_feng8() {
  const int m = 3, n = 3;
  std::vector<std::pair<Vector, Vector>> st;
  for (int sg : {1, -1}) st.push_back({basis_ket(m, 0), domino(n, 0, sg)});
  for (int sg : {1, -1}) st.push_back({domino(m, 0, sg), basis_ket(n, 2)});
  for (int sg : {1, -1}) st.push_back({basis_ket(m, 2), domino(n, 1, sg)});
  for (int sg : {1, -1}) st.push_back({domino(m, 1, sg), basis_ket(n, 0)});
  return make_set(m, n, FamilyId::Feng8, std::move(st));
}

StateSet gen_shi4x4() {
  // fixed 12-state listing over omega = exp(2*pi*i/3)
  const int m = 4, n = 4;
  std::vector<std::pair<Vector, Vector>> st;
  for (int t = 0; t < 3; ++t)
    st.push_back({basis_ket(m, 0), fourier_row(n, 3, 0, 3, t)});
  for (int t = 0; t < 3; ++t)
    st.push_back({fourier_row(m, 3, 0, 3, t), basis_ket(n, 3)});
  for (int t = 0; t < 3; ++t)
    st.push_back({basis_ket(m, 3), fourier_row(n, 3, 1, 3, t)});
  for (int t = 0; t < 3; ++t)
    st.push_back({fourier_row(m, 3, 1, 3, t), basis_ket(n, 0)});
  return make_set(m, n, FamilyId::Shi4x4, std::move(st));
}

StateSet gen_shi(int m, int n) {
  const int kB = n - 1;  // Bob-side Fourier order
  const int kA = m - 1;  // Alice-side Fourier order
  std::vector<std::pair<Vector, Vector>> st(2 * (m + n) - 4);
  for (int s = 0; s < n - 1; ++s)
    st[s] = {basis_ket(m, 0), fourier_row(n, n - 1, 0, kB, s)};
  for (int e = 0; e < m - 1; ++e)
    st[e + n - 1] = {fourier_row(m, m - 1, 0, kA, e), basis_ket(n, n - 1)};
  for (int s = 0; s < n - 1; ++s)
    st[s + n + m - 2] = {basis_ket(m, m - 1), fourier_row(n, n - 1, 1, kB, s)};
  for (int e = 0; e < m - 1; ++e)
    st[e + 2 * n + m - 3] = {fourier_row(m, m - 1, 1, kA, e), basis_ket(n, 0)};
  return make_set(m, n, FamilyId::Shi, std::move(st));
}

StateSet gen_novel_oo(int m, int n) {
  const int d1 = (m - 1) / 2;
  const int d2 = (n - 1) / 2;
  std::vector<std::pair<Vector, Vector>> st(2 * (m + n) - 4);
  for (int d = 0; d < d2; ++d) {
    st[2 * d] = {basis_ket(m, 0), domino(n, 2 * d, 1)};
    st[2 * d + 1] = {basis_ket(m, 0), domino(n, 2 * d, -1)};
  }
  for (int s = 0; s < d1; ++s) {
    st[n - 1 + 2 * s] = {domino(m, 2 * s, 1), basis_ket(n, n - 1)};
    st[n + 2 * s] = {domino(m, 2 * s, -1), basis_ket(n, n - 1)};
  }
  for (int d = 0; d < d2; ++d) {
    st[n + m - 2 + 2 * d] = {basis_ket(m, m - 1), domino(n, 2 * d + 1, 1)};
    st[n + m - 1 + 2 * d] = {basis_ket(m, m - 1), domino(n, 2 * d + 1, -1)};
  }
  for (int s = 0; s < d1; ++s) {
    st[2 * n + m - 3 + 2 * s] = {domino(m, 2 * s + 1, 1), basis_ket(n, 0)};
    st[2 * n + m - 2 + 2 * s] = {domino(m, 2 * s + 1, -1), basis_ket(n, 0)};
  }
  return make_set(m, n, FamilyId::NovelOddOdd, std::move(st));
}

StateSet gen_novel_ee(int m, int n) {
  const int d1 = m / 2;
  const int d2 = n / 2;
  std::vector<std::pair<Vector, Vector>> st(2 * (m + n) - 4);
  for (int t = 0; t < 3; ++t)
    st[t] = {basis_ket(m, 0), fourier_row(n, 3, 0, 3, t)};
  for (int d = 0; d + 2 < d2; ++d) {
    st[2 * d + 3] = {basis_ket(m, 0), domino(n, 2 * d + 3, 1)};
    st[2 * d + 4] = {basis_ket(m, 0), domino(n, 2 * d + 3, -1)};
  }
  for (int t = 0; t < 3; ++t)
    st[t + n - 1] = {fourier_row(m, 3, 0, 3, t), basis_ket(n, n - 1)};
  for (int s = 0; s + 2 < d1; ++s) {
    st[n + 2 * s + 2] = {domino(m, 2 * s + 3, 1), basis_ket(n, n - 1)};
    st[n + 2 * s + 3] = {domino(m, 2 * s + 3, -1), basis_ket(n, n - 1)};
  }
  for (int t = 0; t < 3; ++t)
    st[t + n + m - 2] = {basis_ket(m, m - 1), fourier_row(n, 3, 1, 3, t)};
  for (int d = 0; d + 2 < d2; ++d) {
    st[n + m + 2 * d + 1] = {basis_ket(m, m - 1), domino(n, 2 * d + 4, 1)};
    st[n + m + 2 * d + 2] = {basis_ket(m, m - 1), domino(n, 2 * d + 4, -1)};
  }
  for (int t = 0; t < 3; ++t)
    st[t + 2 * n + m - 3] = {fourier_row(m, 3, 1, 3, t), basis_ket(n, 0)};
  for (int s = 0; s + 2 < d1; ++s) {
    st[2 * n + m + 2 * s] = {domino(m, 2 * s + 4, 1), basis_ket(n, 0)};
    st[2 * n + m + 2 * s + 1] = {domino(m, 2 * s + 4, -1), basis_ket(n, 0)};
  }
  return make_set(m, n, FamilyId::NovelEvenEven, std::move(st));
}

StateSet gen_novel_eo(int m, int n) {
  const int d1 = m / 2;
  const int d2 = (n - 1) / 2;
  std::vector<std::pair<Vector, Vector>> st(2 * (m + n) - 4);
  for (int d = 0; d < d2; ++d) {
    st[2 * d] = {basis_ket(m, 0), domino(n, 2 * d, 1)};
    st[2 * d + 1] = {basis_ket(m, 0), domino(n, 2 * d, -1)};
  }
  for (int t = 0; t < 3; ++t)
    st[t + n - 1] = {fourier_row(m, 3, 0, 3, t), basis_ket(n, n - 1)};
  for (int s = 0; s + 2 < d1; ++s) {
    st[n + 2 * s + 2] = {domino(m, 2 * s + 3, 1), basis_ket(n, n - 1)};
    st[n + 2 * s + 3] = {domino(m, 2 * s + 3, -1), basis_ket(n, n - 1)};
  }
  for (int d = 0; d < d2; ++d) {
    st[n + m - 2 + 2 * d] = {basis_ket(m, m - 1), domino(n, 2 * d + 1, 1)};
    st[n + m - 1 + 2 * d] = {basis_ket(m, m - 1), domino(n, 2 * d + 1, -1)};
  }
  for (int t = 0; t < 3; ++t)
    st[t + 2 * n + m - 3] = {fourier_row(m, 3, 1, 3, t), basis_ket(n, 0)};
  for (int s = 0; s + 2 < d1; ++s) {
    st[2 * n + m + 2 * s] = {domino(m, 2 * s + 4, 1), basis_ket(n, 0)};
    st[2 * n + m + 2 * s + 1] = {domino(m, 2 * s + 4, -1), basis_ket(n, 0)};
  }
  return make_set(m, n, FamilyId::NovelEvenOdd, std::move(st));
}

// |0> + sign |j>
Vector zero_plus(int dim, int j, int sign) {
  Vector v = Vector::Zero(dim);
  v[0] = 1.0;
  v[j] = sign;
  return v;
}

StateSet gen_zhang3x3() {
  const int m = 3, n = 3;
  std::vector<std::pair<Vector, Vector>> st;
  for (int sg : {1, -1}) st.push_back({basis_ket(m, 1), zero_plus(n, 1, sg)});
  for (int sg : {1, -1}) st.push_back({basis_ket(m, 2), zero_plus(n, 2, sg)});
  for (int sg : {1, -1}) st.push_back({zero_plus(m, 1, sg), basis_ket(n, 2)});
  for (int sg : {1, -1}) st.push_back({zero_plus(m, 2, sg), basis_ket(n, 1)});
  return make_set(m, n, FamilyId::Zhang3x3, std::move(st));
}

StateSet gen_zhang4x4() {
  const int m = 4, n = 4;
  std::vector<std::pair<Vector, Vector>> st;
  for (int j = 1; j <= 3; ++j)
    for (int sg : {1, -1}) st.push_back({basis_ket(m, j), zero_plus(n, j, sg)});
  const int bcol[] = {2, 3, 1};
  for (int j = 1; j <= 3; ++j)
    for (int sg : {1, -1})
      st.push_back({zero_plus(m, j, sg), basis_ket(n, bcol[j - 1])});
  return make_set(m, n, FamilyId::Zhang4x4, std::move(st));
}

StateSet gen_novel5x5() {
  const int m = 5, n = 5;
  std::vector<std::pair<Vector, Vector>> st;
  for (int sg : {1, -1}) st.push_back({basis_ket(m, 0), domino(n, 0, sg)});
  for (int sg : {1, -1}) st.push_back({basis_ket(m, 0), domino(n, 2, sg)});
  for (int sg : {1, -1}) st.push_back({domino(m, 0, sg), basis_ket(n, 4)});
  for (int sg : {1, -1}) st.push_back({domino(m, 2, sg), basis_ket(n, 4)});
  for (int sg : {1, -1}) st.push_back({basis_ket(m, 4), domino(n, 3, sg)});
  for (int sg : {1, -1}) st.push_back({basis_ket(m, 4), domino(n, 1, sg)});
  for (int sg : {1, -1}) st.push_back({domino(m, 3, sg), basis_ket(n, 0)});
  for (int sg : {1, -1}) st.push_back({domino(m, 1, sg), basis_ket(n, 0)});
  return make_set(m, n, FamilyId::Novel5x5, std::move(st));
}

struct FamilyMeta {
  FamilyId id;
  std::string_view token;
  std::optional<std::pair<int, int>> dims;
  std::string constraint;
};

const std::vector<FamilyMeta>& metas() {
  static const std::vector<FamilyMeta> table = {
      {FamilyId::Feng8, "feng8", {{3, 3}}, "m = n = 3"},
      {FamilyId::Shi4x4, "shi4x4", {{4, 4}}, "m = n = 4"},
      {FamilyId::Shi, "shi", std::nullopt, "m >= 3 and n >= 3"},
      {FamilyId::NovelOddOdd, "novel-odd-odd", std::nullopt,
       "m, n odd and >= 3"},
      {FamilyId::NovelEvenEven, "novel-even-even", std::nullopt,
       "m, n even and >= 4"},
      {FamilyId::NovelEvenOdd, "novel-even-odd", std::nullopt,
       "m even >= 4, n odd >= 3"},
      {FamilyId::Novel, "novel", std::nullopt, "m >= 3 and n >= 3"},
      {FamilyId::Zhang3x3, "zhang3x3", {{3, 3}}, "m = n = 3"},
      {FamilyId::Zhang4x4, "zhang4x4", {{4, 4}}, "m = n = 4"},
      {FamilyId::Novel5x5, "novel5x5", {{5, 5}}, "m = n = 5"},
      {FamilyId::Shi5x5, "shi5x5", {{5, 5}}, "m = n = 5"},
  };
  return table;
}

const FamilyMeta& meta(FamilyId f) {
  for (const FamilyMeta& fm : metas())
    if (fm.id == f) return fm;
  throw std::invalid_argument("unknown family");
}

}  // namespace

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> v;
    for (const FamilyMeta& fm : metas()) v.push_back(fm.id);
    return v;
  }();
  return ids;
}

std::string_view family_token(FamilyId f) { return meta(f).token; }

std::optional<FamilyId> family_from_token(std::string_view token) {
  for (const FamilyMeta& fm : metas())
    if (fm.token == token) return fm.id;
  return std::nullopt;
}

std::optional<std::pair<int, int>> fixed_dims(FamilyId f) {
  return meta(f).dims;
}

bool family_accepts(FamilyId f, int m, int n) {
  if (auto d = fixed_dims(f)) return m == d->first && n == d->second;
  switch (f) {
    case FamilyId::Shi:
    case FamilyId::Novel:
      return m >= 3 && n >= 3;
    case FamilyId::NovelOddOdd:
      return m >= 3 && n >= 3 && m % 2 == 1 && n % 2 == 1;
    case FamilyId::NovelEvenEven:
      return m >= 4 && n >= 4 && m % 2 == 0 && n % 2 == 0;
    case FamilyId::NovelEvenOdd:
      return m >= 4 && m % 2 == 0 && n >= 3 && n % 2 == 1;
    default:
      return false;
  }
}

std::string family_constraint(FamilyId f) { return meta(f).constraint; }

StateSet generate(FamilyId f, int m, int n) {
  if (!family_accepts(f, m, n))
    throw std::invalid_argument("family " + std::string(family_token(f)) +
                                " requires " + family_constraint(f) +
                                "; got m=" + std::to_string(m) +
                                ", n=" + std::to_string(n));
  switch (f) {
    case FamilyId::Feng8:
      return gen_feng8();
    case FamilyId::Shi4x4:
      return gen_shi4x4();
    case FamilyId::Shi:
      return gen_shi(m, n);
    case FamilyId::NovelOddOdd:
      return gen_novel_oo(m, n);
    case FamilyId::NovelEvenEven:
      return gen_novel_ee(m, n);
    case FamilyId::NovelEvenOdd:
      return gen_novel_eo(m, n);
    case FamilyId::Novel: {
      const bool modd = m % 2 == 1;
      const bool nodd = n % 2 == 1;
      StateSet s;
      if (modd && nodd) {
        s = gen_novel_oo(m, n);
      } else if (!modd && !nodd) {
        s = gen_novel_ee(m, n);
      } else if (!modd) {
        s = gen_novel_eo(m, n);
      } else {
        s = swap_parties(gen_novel_eo(n, m));  // odd m, even n
      }
      s.family = std::string(family_token(FamilyId::Novel));
      return s;
    }
    case FamilyId::Zhang3x3:
      return gen_zhang3x3();
    case FamilyId::Zhang4x4:
      return gen_zhang4x4();
    case FamilyId::Novel5x5:
      return gen_novel5x5();
    case FamilyId::Shi5x5: {
      StateSet s = gen_shi(5, 5);
      s.family = std::string(family_token(FamilyId::Shi5x5));
      return s;
    }
  }
  throw std::invalid_argument("unknown family");
}

long count_formula(FamilyId f, int m, int n) {
  if (!family_accepts(f, m, n))
    throw std::invalid_argument("family " + std::string(family_token(f)) +
                                " requires " + family_constraint(f));
  return 2L * (m + n) - 4;
}

StateSet complete_with_grid(const StateSet& s, double tol) {
  StateSet out = s;
  for (int i = 1; i <= s.m - 2; ++i) {
    for (int j = 1; j <= s.n - 2; ++j) {
      ProductState g;
      g.label = "grid_" + std::to_string(i) + "_" + std::to_string(j);
      g.a = Vector::Zero(s.m);
      g.a[i] = 1.0;
      g.b = Vector::Zero(s.n);
      g.b[j] = 1.0;
      for (const ProductState& st : out.states) {
        if (!orthogonality_side(g, st, tol))
          throw std::invalid_argument("grid state " + g.label +
                                      " is not orthogonal to " + st.label);
      }
      out.states.push_back(std::move(g));
    }
  }
  return out;
}

bool is_complete_basis(const StateSet& s, double rank_tol) {
  if (s.size() != s.m * s.n) return false;
  Matrix v(s.m * s.n, s.size());
  for (int k = 0; k < s.size(); ++k)
    v.col(k) = kron(s.states[k].a, s.states[k].b);
  Eigen::JacobiSVD<Matrix> svd(v);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return false;
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv[k] > rank_tol * sv[0]) ++rank;
  return rank == s.m * s.n;
}

}  // namespace nlops
