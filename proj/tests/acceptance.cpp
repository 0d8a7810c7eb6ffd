// Acceptance suite: every release criterion as one timed pass/fail line.
// Exits with the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nlops/certify.hpp"
#include "nlops/exact_rank.hpp"
#include "nlops/families.hpp"
#include "nlops/ortho_graph.hpp"
#include "nlops/states.hpp"

using namespace nlops;

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (detail.tellp() > 0) detail << "; ";
    detail << what;
  }
};

int failures = 0;

void criterion(int id, const std::string& title,
               const std::function<void(Checker&)>& fn) {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    fn(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (!c.ok) ++failures;
  std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL",
              id, title.c_str(), secs, c.ok ? "" : " -- ",
              c.ok ? "" : c.detail.str().c_str());
  std::fflush(stdout);
}

Vector unit(int dim, int j) {
  Vector v = Vector::Zero(dim);
  v[j] = 1.0;
  return v;
}

StateSet computational_basis(int m, int n) {
  StateSet s;
  s.m = m;
  s.n = n;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      s.states.push_back({"e" + std::to_string(i) + std::to_string(j),
                          unit(m, i), unit(n, j)});
  return s;
}

struct Instance {
  FamilyId family;
  int m, n;
};

std::string name(const Instance& in) {
  std::ostringstream os;
  os << family_token(in.family) << "(" << in.m << "," << in.n << ")";
  return os.str();
}

// the certificate instances: the fixed sets plus every parametric instance
// inside the stated ranges
std::vector<Instance> certificate_instances() {
  std::vector<Instance> out = {
      {FamilyId::Feng8, 3, 3},    {FamilyId::Shi4x4, 4, 4},
      {FamilyId::Novel5x5, 5, 5}, {FamilyId::Zhang3x3, 3, 3},
      {FamilyId::Zhang4x4, 4, 4},
  };
  for (int m = 3; m <= 6; ++m)
    for (int n = m; n <= 6; ++n) out.push_back({FamilyId::Shi, m, n});
  for (int m = 3; m <= 7; m += 2)
    for (int n = 3; n <= 7; n += 2) out.push_back({FamilyId::NovelOddOdd, m, n});
  for (int m = 4; m <= 6; m += 2)
    for (int n = 4; n <= 6; n += 2)
      out.push_back({FamilyId::NovelEvenEven, m, n});
  for (int m = 4; m <= 6; m += 2)
    for (int n = 3; n <= 7; n += 2)
      out.push_back({FamilyId::NovelEvenOdd, m, n});
  return out;
}

bool rational_amplitudes(const StateSet& s) {
  for (const ProductState& st : s.states) {
    for (const Vector* v : {&st.a, &st.b}) {
      for (Eigen::Index k = 0; k < v->size(); ++k) {
        const auto amp = recognize_amplitude((*v)[k]);
        if (!amp || amp->is_root) return false;
      }
    }
  }
  return true;
}

Complex random_nonzero_scalar(std::mt19937& rng) {
  std::uniform_real_distribution<double> mag(0.2, 2.0);
  std::uniform_real_distribution<double> ph(0.0, 6.283185307179586);
  return std::polar(mag(rng), ph(rng));
}

Matrix random_unitary(std::mt19937& rng, int dim) {
  std::normal_distribution<double> g;
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ();
}

}  // namespace

int main() {
  criterion(1, "generator counts equal 2(m+n)-4 for 3 <= m,n <= 8", [](Checker& c) {
    const auto t0 = std::chrono::steady_clock::now();
    for (FamilyId f : {FamilyId::Novel, FamilyId::Shi}) {
      for (int m = 3; m <= 8; ++m) {
        for (int n = 3; n <= 8; ++n) {
          const StateSet s = generate(f, m, n);
          c.require(s.size() == 2 * (m + n) - 4,
                    name({f, m, n}) + " has " + std::to_string(s.size()) +
                        " states");
          c.require(count_formula(f, m, n) == s.size(),
                    name({f, m, n}) + " formula mismatch");
        }
      }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    c.require(secs < 1.0, "took longer than 1 s");
  });

  criterion(2, "every generated instance passes validation below 1e-12", [](Checker& c) {
    const auto t0 = std::chrono::steady_clock::now();
    for (FamilyId f : {FamilyId::Novel, FamilyId::Shi}) {
      for (int m = 3; m <= 8; ++m) {
        for (int n = 3; n <= 8; ++n) {
          const ValidationReport rep = validate_set(generate(f, m, n));
          c.require(rep.valid, name({f, m, n}) + " invalid");
          c.require(rep.max_residual < 1e-12,
                    name({f, m, n}) + " residual " +
                        std::to_string(rep.max_residual));
        }
      }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    c.require(secs < 2.0, "took longer than 2 s");
  });

  criterion(3, "nonlocality certificates hold on every listed instance", [](Checker& c) {
    const auto t0 = std::chrono::steady_clock::now();
    for (const Instance& in : certificate_instances()) {
      const NonlocalityReport rep =
          certify_nonlocal(generate(in.family, in.m, in.n));
      c.require(rep.certified_nonlocal, name(in) + " not certified");
      for (const PartyAnalysis* pa : {&rep.alice, &rep.bob}) {
        c.require(pa->nullspace_dim == 1,
                  name(in) + " " + party_name(pa->party) + " dim " +
                      std::to_string(pa->nullspace_dim));
        c.require(pa->identity_overlap >= 1.0 - 1e-9,
                  name(in) + " identity overlap " +
                      std::to_string(pa->identity_overlap));
      }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    c.require(secs < 30.0, "took longer than 30 s");
  });

  criterion(4, "product bases are negative controls with valid witness POVMs", [](Checker& c) {
    for (auto [m, n] : {std::pair{3, 3}, {4, 5}}) {
      const StateSet s = computational_basis(m, n);
      const NonlocalityReport rep = certify_nonlocal(s);
      c.require(!rep.certified_nonlocal, "basis certified");
      c.require(!rep.alice.trivial_only && !rep.bob.trivial_only,
                "a party came out trivial-only");
      c.require(rep.alice.nullspace_dim == m,
                "alice dim " + std::to_string(rep.alice.nullspace_dim));
      c.require(rep.bob.nullspace_dim == n,
                "bob dim " + std::to_string(rep.bob.nullspace_dim));
      for (Party p : {Party::Alice, Party::Bob}) {
        const PartyAnalysis pa = p == Party::Alice ? rep.alice : rep.bob;
        auto [e, f] = witness_to_povm(*pa.witness);
        Eigen::SelfAdjointEigenSolver<Matrix> se(e), sf(f);
        c.require(se.eigenvalues().minCoeff() > -1e-10, "E not PSD");
        c.require(sf.eigenvalues().minCoeff() > -1e-10, "I-E not PSD");
        const ConstraintSystem cs = assemble_constraints(s, p);
        double worst = 0.0;
        for (const auto& [i, j] : cs.sources) {
          const Complex lhs = inner_product(cs.own[i], Vector(e * cs.own[j]));
          const Complex ov = inner_product(cs.other[i], cs.other[j]);
          worst = std::max(worst, std::abs(lhs * ov));
        }
        c.require(worst < 1e-8, "witness POVM residual " + std::to_string(worst));
      }
    }
  });

  criterion(5, "exact rank oracle agrees with the floating solver", [](Checker& c) {
    // integer-amplitude instances
    int rational_checked = 0;
    for (const Instance& in : certificate_instances()) {
      const StateSet s = generate(in.family, in.m, in.n);
      if (!rational_amplitudes(s)) continue;
      ++rational_checked;
      for (Party p : {Party::Alice, Party::Bob}) {
        const ConstraintSystem cs = assemble_constraints(s, p);
        const long exact = exact_nullspace_dim(cs);
        const long floating = static_cast<long>(nullspace_basis(cs).size());
        c.require(exact == floating,
                  name(in) + " " + party_name(p) + ": exact " +
                      std::to_string(exact) + " vs floating " +
                      std::to_string(floating));
      }
    }
    c.require(rational_checked >= 12, "too few rational instances swept");

    // root-of-unity instances
    for (auto [m, n] : {std::pair{3, 3}, {3, 4}, {4, 4}, {4, 5}, {5, 5}}) {
      const StateSet s = generate(FamilyId::Shi, m, n);
      for (Party p : {Party::Alice, Party::Bob}) {
        const ConstraintSystem cs = assemble_constraints(s, p);
        const long exact = exact_nullspace_dim(cs);
        const long floating = static_cast<long>(nullspace_basis(cs).size());
        c.require(exact == floating,
                  name({FamilyId::Shi, m, n}) + " " + party_name(p) +
                      ": exact " + std::to_string(exact) + " vs floating " +
                      std::to_string(floating));
      }
    }
  });

  criterion(6, "edge counts: 39 for the zhang 4x4 set, 33 for ours", [](Checker& c) {
    const EdgeCounts zhang =
        edge_counts(build_graph(generate(FamilyId::Zhang4x4, 4, 4)));
    c.require(zhang.a == 39, "zhang4x4 A-edges " + std::to_string(zhang.a));
    const EdgeCounts ours =
        edge_counts(build_graph(generate(FamilyId::Novel, 4, 4)));
    c.require(ours.a == 33, "novel(4,4) A-edges " + std::to_string(ours.a));
    c.require(ours.both == 0,
              "novel(4,4) both-edges " + std::to_string(ours.both));
  });

  criterion(7, "isomorphism verdicts with re-verified mappings", [](Checker& c) {
    const auto timed = [&](const OrthoGraph& g1, const OrthoGraph& g2) {
      const auto t0 = std::chrono::steady_clock::now();
      const IsoResult res = check_isomorphic(g1, g2);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      c.require(secs < 5.0, "a decision took longer than 5 s");
      return res;
    };

    const OrthoGraph feng = build_graph(generate(FamilyId::Feng8, 3, 3));
    const OrthoGraph zhang33 = build_graph(generate(FamilyId::Zhang3x3, 3, 3));
    const IsoResult same = timed(feng, zhang33);
    c.require(same.outcome == IsoOutcome::Isomorphic, "feng8 !~ zhang3x3");
    if (same.outcome == IsoOutcome::Isomorphic) {
      for (int i = 0; i < feng.size(); ++i)
        for (int j = i + 1; j < feng.size(); ++j)
          c.require(feng.edge(i, j) ==
                        zhang33.edge(same.mapping[i], same.mapping[j]),
                    "returned mapping breaks a color");
    }

    const IsoResult diff44 =
        timed(build_graph(generate(FamilyId::Zhang4x4, 4, 4)),
              build_graph(generate(FamilyId::Novel, 4, 4)));
    c.require(diff44.outcome == IsoOutcome::NotIsomorphic,
              "zhang4x4 ~ novel(4,4)");

    const IsoResult diff55 =
        timed(build_graph(generate(FamilyId::Shi5x5, 5, 5)),
              build_graph(generate(FamilyId::Novel5x5, 5, 5)));
    c.require(diff55.outcome == IsoOutcome::NotIsomorphic,
              "shi5x5 ~ novel5x5");
  });

  criterion(8, "middle-grid completion yields complete bases (3 <= m,n <= 6)", [](Checker& c) {
    for (FamilyId f : {FamilyId::Novel, FamilyId::Shi}) {
      for (int m = 3; m <= 6; ++m) {
        for (int n = 3; n <= 6; ++n) {
          const StateSet full = complete_with_grid(generate(f, m, n));
          c.require(full.size() == m * n, name({f, m, n}) + " size");
          c.require(is_complete_basis(full), name({f, m, n}) + " not complete");
        }
      }
    }
  });

  criterion(9, "property suites hold with zero violations", [](Checker& c) {
    std::mt19937 rng(20240);
    const std::vector<Instance> pool = {
        {FamilyId::Feng8, 3, 3},   {FamilyId::Novel, 3, 4},
        {FamilyId::Novel, 4, 4},   {FamilyId::Novel5x5, 5, 5},
        {FamilyId::Shi, 3, 4},     {FamilyId::Zhang4x4, 4, 4},
    };

    // identity feasibility on 200 random valid subsets
    int subsets = 0;
    while (subsets < 200) {
      const Instance& in = pool[rng() % pool.size()];
      const StateSet base = generate(in.family, in.m, in.n);
      StateSet sub;
      sub.m = base.m;
      sub.n = base.n;
      for (const ProductState& st : base.states)
        if (rng() % 2 == 0) sub.states.push_back(st);
      if (sub.size() == 0) continue;
      ++subsets;
      for (Party p : {Party::Alice, Party::Bob})
        c.require(analyze_party(sub, p).nullspace_dim >= 1,
                  "identity infeasible on a subset of " + name(in));
    }

    // scaling invariance
    for (const Instance& in : pool) {
      const StateSet base = generate(in.family, in.m, in.n);
      const NonlocalityReport ref = certify_nonlocal(base);
      for (int trial = 0; trial < 5; ++trial) {
        StateSet scaled = base;
        for (ProductState& st : scaled.states) {
          st.a *= random_nonzero_scalar(rng);
          st.b *= random_nonzero_scalar(rng);
        }
        const NonlocalityReport rep = certify_nonlocal(scaled);
        c.require(rep.alice.nullspace_dim == ref.alice.nullspace_dim &&
                      rep.bob.nullspace_dim == ref.bob.nullspace_dim,
                  "scaling changed a dimension on " + name(in));
      }
    }

    // local-unitary invariance, 20 unitaries per instance
    for (const Instance& in : pool) {
      const StateSet base = generate(in.family, in.m, in.n);
      const PartyAnalysis ref = analyze_party(base, Party::Alice);
      for (int trial = 0; trial < 20; ++trial) {
        const Matrix u = random_unitary(rng, base.m);
        StateSet rotated = base;
        for (ProductState& st : rotated.states) st.a = u * st.a;
        const PartyAnalysis pa = analyze_party(rotated, Party::Alice);
        c.require(pa.nullspace_dim == ref.nullspace_dim &&
                      pa.trivial_only == ref.trivial_only,
                  "a local unitary changed the verdict on " + name(in));
      }
    }

    // party-swap symmetry
    for (const Instance& in : pool) {
      const StateSet s = generate(in.family, in.m, in.n);
      const NonlocalityReport fwd = certify_nonlocal(s);
      const NonlocalityReport rev = certify_nonlocal(swap_parties(s));
      c.require(rev.alice.nullspace_dim == fwd.bob.nullspace_dim &&
                    rev.bob.nullspace_dim == fwd.alice.nullspace_dim,
                "party swap asymmetry on " + name(in));
    }

    // monotonicity under state insertion
    for (const Instance& in : {Instance{FamilyId::Novel, 4, 5},
                               Instance{FamilyId::Shi, 4, 4}}) {
      const StateSet full = generate(in.family, in.m, in.n);
      StateSet partial;
      partial.m = full.m;
      partial.n = full.n;
      int last_a = full.m * full.m, last_b = full.n * full.n;
      for (const ProductState& st : full.states) {
        partial.states.push_back(st);
        const int da = analyze_party(partial, Party::Alice).nullspace_dim;
        const int db = analyze_party(partial, Party::Bob).nullspace_dim;
        c.require(da <= last_a && db <= last_b,
                  "appending a state enlarged a solution space on " + name(in));
        last_a = da;
        last_b = db;
      }
    }
  });

  criterion(10, "the fourier generator at 4x4 reproduces the fixed listing", [](Checker& c) {
    const StateSet general = generate(FamilyId::Shi, 4, 4);
    const StateSet fixed = generate(FamilyId::Shi4x4, 4, 4);
    c.require(general.size() == fixed.size(), "sizes differ");
    for (int k = 0; k < general.size(); ++k) {
      const Vector va = kron(general.states[k].a, general.states[k].b);
      const Vector vb = kron(fixed.states[k].a, fixed.states[k].b);
      Eigen::Index piv;
      vb.cwiseAbs().maxCoeff(&piv);
      const Complex scale = va[piv] / vb[piv];
      c.require(std::abs(scale) > 1e-12 &&
                    (va - scale * vb).norm() <= 1e-10 * va.norm(),
                "state " + std::to_string(k + 1) + " differs");
    }
  });

  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
