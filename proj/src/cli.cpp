#include "nlops/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "nlops/families.hpp"
#include "nlops/json_io.hpp"
#include "nlops/ortho_graph.hpp"

namespace nlops {

namespace {

using nlohmann::json;

json matrix_to_json(const Matrix& h) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < h.cols(); ++j)
      row.push_back({h(i, j).real(), h(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json party_to_json(const PartyAnalysis& pa, bool include_witness) {
  json j;
  j["dim"] = pa.nullspace_dim;
  j["verdict"] = pa.trivial_only ? "trivial_only" : "nontrivial_exists";
  j["max_residual"] = pa.max_residual;
  j["identity_overlap"] = pa.identity_overlap;
  if (include_witness && pa.witness) j["witness"] = matrix_to_json(*pa.witness);
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::string family_list() {
  std::string s;
  for (FamilyId f : all_families()) {
    if (!s.empty()) s += ", ";
    s += std::string(family_token(f));
  }
  return s;
}

struct CommonOpts {
  double tol = kOrthoTol;
  double rank_tol = kRankTol;
  bool as_json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--tol", o.tol, "orthogonality tolerance (relative)")
      ->capture_default_str();
  cmd->add_option("--rank-tol", o.rank_tol, "rank tolerance (relative)")
      ->capture_default_str();
  cmd->add_flag("--json", o.as_json, "machine-readable JSON output");
}

int cmd_generate(const std::string& family, int m, int n,
                 const std::string& out_path, const CommonOpts& o) {
  auto fid = family_from_token(family);
  if (!fid) {
    std::cerr << "error: unknown family '" << family << "' (available: "
              << family_list() << ")\n";
    return 2;
  }
  // fixed families may omit --m/--n
  if (m == 0 || n == 0) {
    if (auto dims = fixed_dims(*fid)) {
      if (m == 0) m = dims->first;
      if (n == 0) n = dims->second;
    } else {
      std::cerr << "error: family " << family << " requires --m and --n\n";
      return 2;
    }
  }
  const StateSet s = generate(*fid, m, n);
  if (!out_path.empty()) save_json_file(s, out_path);
  if (out_path.empty() || o.as_json) {
    std::cout << save_json(s) << "\n";
  } else {
    std::cout << "family=" << family << " m=" << m << " n=" << n
              << " states=" << s.size() << " -> " << out_path << "\n";
  }
  return 0;
}

int cmd_check(const std::string& in_path, const CommonOpts& o) {
  const StateSet s = load_json_file(in_path);
  const ValidationReport v = validate_set(s, o.tol);
  if (!v.valid) {
    if (!v.errors.empty()) {
      std::cerr << "error: invalid set: " << v.errors.front() << "\n";
    } else {
      const PairVerdict& pv = v.violations.front();
      std::cerr << "error: states " << s.states[pv.i].label << " and "
                << s.states[pv.j].label
                << " are orthogonal on neither side (residual "
                << pv.residual << ")\n";
    }
    return 2;
  }
  const NonlocalityReport rep = certify_nonlocal(s, o.tol, o.rank_tol);
  if (o.as_json) {
    json j = json::parse(report_to_json(rep));
    j["valid"] = true;
    j["max_pair_residual"] = v.max_residual;
    j["states"] = s.size();
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("states: %d (%dx%d%s%s)\n", s.size(), s.m, s.n,
                s.family.empty() ? "" : ", family ", s.family.c_str());
    std::printf("orthogonality: valid, %zu pairs, max residual %.3g\n",
                v.pairs.size(), v.max_residual);
    for (const PartyAnalysis* pa : {&rep.alice, &rep.bob}) {
      std::printf("%-6s nullspace dim %d, %s (identity overlap %.12f, "
                  "residual %.3g)\n",
                  (std::string(party_name(pa->party)) + ":").c_str(),
                  pa->nullspace_dim,
                  pa->trivial_only ? "trivial-only" : "nontrivial-exists",
                  pa->identity_overlap, pa->max_residual);
    }
    std::printf("certified nonlocal: %s\n",
                rep.certified_nonlocal ? "yes" : "no");
  }
  return rep.certified_nonlocal ? 0 : 1;
}

int cmd_graph(const std::string& in_path, const std::string& side,
              const std::string& out_path, const CommonOpts& o) {
  const StateSet s = load_json_file(in_path);
  DotSide ds;
  if (side == "A" || side == "a")
    ds = DotSide::A;
  else if (side == "B" || side == "b")
    ds = DotSide::B;
  else if (side == "both" || side == "overlay")
    ds = DotSide::Overlay;
  else {
    std::cerr << "error: --side must be A, B or both\n";
    return 2;
  }
  const OrthoGraph g = build_graph(s, o.tol);
  const EdgeCounts c = edge_counts(g);
  const std::string dot = to_dot(g, ds);
  if (!out_path.empty()) write_text_file(out_path, dot);
  if (o.as_json) {
    json j;
    j["edges_a"] = c.a;
    j["edges_b"] = c.b;
    j["edges_both"] = c.both;
    j["vertices"] = g.size();
    if (out_path.empty()) j["dot"] = dot;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("edges: A=%d B=%d both=%d\n", c.a, c.b, c.both);
    if (out_path.empty()) std::cout << dot;
  }
  return 0;
}

int cmd_iso(const std::string& a_path, const std::string& b_path,
            bool allow_swap, const CommonOpts& o) {
  const StateSet sa = load_json_file(a_path);
  const StateSet sb = load_json_file(b_path);
  const OrthoGraph ga = build_graph(sa, o.tol);
  const OrthoGraph gb = build_graph(sb, o.tol);
  const IsoResult res = check_isomorphic(ga, gb, allow_swap);
  if (o.as_json) {
    json j;
    j["isomorphic"] = res.outcome == IsoOutcome::Isomorphic;
    j["budget_exceeded"] = res.outcome == IsoOutcome::BudgetExceeded;
    if (res.outcome == IsoOutcome::Isomorphic) {
      json m = json::object();
      for (int i = 0; i < ga.size(); ++i)
        m[ga.vertices[i]] = gb.vertices[res.mapping[i]];
      j["mapping"] = std::move(m);
    } else {
      j["obstruction"] = res.obstruction;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    switch (res.outcome) {
      case IsoOutcome::Isomorphic:
        std::printf("isomorphic: yes\n");
        for (int i = 0; i < ga.size(); ++i)
          std::printf("  %s -> %s\n", ga.vertices[i].c_str(),
                      gb.vertices[res.mapping[i]].c_str());
        break;
      case IsoOutcome::NotIsomorphic:
        std::printf("isomorphic: no (%s)\n", res.obstruction.c_str());
        break;
      case IsoOutcome::BudgetExceeded:
        std::printf("undecided: %s\n", res.obstruction.c_str());
        break;
    }
  }
  if (res.outcome == IsoOutcome::Isomorphic) return 0;
  return res.outcome == IsoOutcome::NotIsomorphic ? 1 : 2;
}

int cmd_complete(const std::string& in_path, const std::string& out_path,
                 const CommonOpts& o) {
  const StateSet s = load_json_file(in_path);
  const StateSet full = complete_with_grid(s, o.tol);
  const bool complete = is_complete_basis(full, o.rank_tol);
  if (!out_path.empty()) save_json_file(full, out_path);
  if (o.as_json) {
    json j;
    j["states_before"] = s.size();
    j["states_after"] = full.size();
    j["complete_basis"] = complete;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("completed: %d -> %d states; complete basis: %s\n", s.size(),
                full.size(), complete ? "yes" : "no");
  }
  return complete ? 0 : 1;
}

// literature count formulas reported alongside the generated families;
// square-system rows evaluate at d = min(m, n)
struct FormulaRow {
  const char* name;
  const char* formula;
  const char* constraint;
  const char* kind;
  long (*eval)(int m, int n);
  bool (*applies)(int m, int n);
};

const FormulaRow kFormulaRows[] = {
    {"Bennett et al. 1999", "9", "m = n = 3", "complete",
     [](int, int) -> long { return 9; },
     [](int m, int n) { return std::min(m, n) >= 3; }},
    {"Zhang et al. 2014", "d^2", "d odd, d >= 3", "complete",
     [](int m, int n) -> long { long d = std::min(m, n); return d * d; },
     [](int m, int n) { return std::min(m, n) >= 3 && std::min(m, n) % 2 == 1; }},
    {"Bennett et al. 1999 (UPB)", "3", "m = n = 3", "unextendible",
     [](int, int) -> long { return 3; },
     [](int m, int n) { return std::min(m, n) >= 3; }},
    {"DiVincenzo et al. 2003", "d^2-2d+1", "d even, d >= 4", "unextendible",
     [](int m, int n) -> long { long d = std::min(m, n); return d * d - 2 * d + 1; },
     [](int m, int n) { return std::min(m, n) >= 4 && std::min(m, n) % 2 == 0; }},
    {"Halder 2019", "d^2-2d+2", "d odd, d >= 3", "unextendible",
     [](int m, int n) -> long { long d = std::min(m, n); return d * d - 2 * d + 2; },
     [](int m, int n) { return std::min(m, n) >= 3 && std::min(m, n) % 2 == 1; }},
    {"Shi et al. 2020", "mn-4*floor((m-1)/2)", "3 <= m <= n", "unextendible",
     [](int m, int n) -> long { return static_cast<long>(m) * n - 4 * ((m - 1) / 2); },
     [](int m, int n) { return m >= 3 && m <= n; }},
    {"Yu and Oh 2015", "2d-1", "d >= 3", "uncompletable",
     [](int m, int n) -> long { return 2L * std::min(m, n) - 1; },
     [](int m, int n) { return std::min(m, n) >= 3; }},
    {"Wang et al. 2015", "6d-9", "d odd, d >= 3", "completable",
     [](int m, int n) -> long { return 6L * std::min(m, n) - 9; },
     [](int m, int n) { return std::min(m, n) >= 3 && std::min(m, n) % 2 == 1; }},
    {"Zhang et al. 2015", "4d-4", "d >= 3", "completable",
     [](int m, int n) -> long { return 4L * std::min(m, n) - 4; },
     [](int m, int n) { return std::min(m, n) >= 3; }},
    {"Zhang et al. 2016", "mn", "m, n >= 3", "completable",
     [](int m, int n) -> long { return static_cast<long>(m) * n; },
     [](int m, int n) { return m >= 3 && n >= 3; }},
    {"Wang et al. 2015 (general)", "3m+3n-9", "m, n >= 3", "completable",
     [](int m, int n) -> long { return 3L * m + 3L * n - 9; },
     [](int m, int n) { return m >= 3 && n >= 3; }},
    {"Zhang et al. 2016 (second)", "3n+m-4", "3 <= m <= n", "completable",
     [](int m, int n) -> long { return 3L * n + m - 4; },
     [](int m, int n) { return m >= 3 && m <= n; }},
    {"Zhang et al. 2016 (third)", "2n-1", "3 <= m <= n", "uncompletable",
     [](int, int n) -> long { return 2L * n - 1; },
     [](int m, int n) { return m >= 3 && m <= n; }},
    {"Wang et al. 2017", "2n-1", "4 <= m <= n", "uncompletable",
     [](int, int n) -> long { return 2L * n - 1; },
     [](int m, int n) { return m >= 4 && m <= n; }},
    {"Zhang et al. 2017", "3m+3n-8", "4 <= m <= n", "uncompletable",
     [](int m, int n) -> long { return 3L * m + 3L * n - 8; },
     [](int m, int n) { return m >= 4 && m <= n; }},
};

int cmd_report(int m_max, int n_max, const CommonOpts& o) {
  if (m_max < 3 || n_max < 3) {
    std::cerr << "error: report requires m, n >= 3\n";
    return 2;
  }
  json rows = json::array();
  for (FamilyId f : all_families()) {
    int m = m_max, n = n_max;
    if (!family_accepts(f, m, n)) {
      if (auto dims = fixed_dims(f);
          dims && dims->first <= m_max && dims->second <= n_max) {
        m = dims->first;
        n = dims->second;
      } else {
        continue;
      }
    }
    const StateSet s = generate(f, m, n);
    const ValidationReport v = validate_set(s, o.tol);
    json row;
    row["name"] = std::string(family_token(f));
    row["m"] = m;
    row["n"] = n;
    row["formula"] = "2m+2n-4";
    row["formula_count"] = count_formula(f, m, n);
    row["generated_count"] = s.size();
    row["orthogonal"] = v.valid;
    bool certified = false;
    bool completable = false;
    if (v.valid) {
      certified = certify_nonlocal(s, o.tol, o.rank_tol).certified_nonlocal;
      try {
        completable = is_complete_basis(complete_with_grid(s, o.tol), o.rank_tol);
      } catch (const std::invalid_argument&) {
        completable = false;  // some grid state collides
      }
    }
    row["certified_nonlocal"] = certified;
    row["grid_completable"] = completable;
    rows.push_back(std::move(row));
  }

  json formulas = json::array();
  for (const FormulaRow& fr : kFormulaRows) {
    json row;
    row["name"] = fr.name;
    row["formula"] = fr.formula;
    row["constraint"] = fr.constraint;
    row["kind"] = fr.kind;
    if (fr.applies(m_max, n_max))
      row["count"] = fr.eval(m_max, n_max);
    else
      row["count"] = nullptr;
    row["formula_only"] = true;
    formulas.push_back(std::move(row));
  }

  if (o.as_json) {
    json j;
    j["m"] = m_max;
    j["n"] = n_max;
    j["families"] = std::move(rows);
    j["literature"] = std::move(formulas);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::printf("implemented families at m=%d n=%d\n", m_max, n_max);
  std::printf("%-16s %5s %5s %8s %9s %6s %10s %12s\n", "family", "m", "n",
              "formula", "generated", "ortho", "certified", "completable");
  for (const json& r : rows) {
    std::printf("%-16s %5d %5d %8ld %9d %6s %10s %12s\n",
                r["name"].get<std::string>().c_str(), r["m"].get<int>(),
                r["n"].get<int>(), r["formula_count"].get<long>(),
                r["generated_count"].get<int>(),
                r["orthogonal"].get<bool>() ? "pass" : "FAIL",
                r["certified_nonlocal"].get<bool>() ? "yes" : "no",
                r["grid_completable"].get<bool>() ? "yes" : "no");
  }
  std::printf("\nliterature count formulas (formula-only)\n");
  std::printf("%-28s %-20s %-18s %-14s %8s\n", "construction", "formula",
              "constraint", "kind", "count");
  for (const json& r : formulas) {
    std::string count = r["count"].is_null()
                            ? "-"
                            : std::to_string(r["count"].get<long>());
    std::printf("%-28s %-20s %-18s %-14s %8s\n",
                r["name"].get<std::string>().c_str(),
                r["formula"].get<std::string>().c_str(),
                r["constraint"].get<std::string>().c_str(),
                r["kind"].get<std::string>().c_str(), count.c_str());
  }
  return 0;
}

}  // namespace

std::string report_to_json(const NonlocalityReport& rep, bool include_witness) {
  json j;
  j["alice"] = party_to_json(rep.alice, include_witness);
  j["bob"] = party_to_json(rep.bob, include_witness);
  j["certified_nonlocal"] = rep.certified_nonlocal;
  return j.dump(2);
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"orthogonal product state nonlocality toolkit"};
  app.require_subcommand(1);

  CommonOpts gen_o, chk_o, gr_o, iso_o, cmp_o, rep_o;
  std::string family, out_path, in_path, a_path, b_path, side = "A";
  int m = 0, n = 0;
  bool allow_swap = false;

  CLI::App* gen = app.add_subcommand("generate", "generate a family instance");
  gen->add_option("--family", family, "family token (" + family_list() + ")")
      ->required();
  gen->add_option("--m", m, "Alice dimension");
  gen->add_option("--n", n, "Bob dimension");
  gen->add_option("--out", out_path, "output state-set JSON path");
  add_common(gen, gen_o);

  CLI::App* chk = app.add_subcommand(
      "check", "validate a set and decide the nonlocality certificate");
  chk->add_option("--in", in_path, "state-set JSON path")->required();
  add_common(chk, chk_o);

  CLI::App* gr = app.add_subcommand("graph", "orthogonality graph and DOT export");
  gr->add_option("--in", in_path, "state-set JSON path")->required();
  gr->add_option("--side", side, "A, B or both")->capture_default_str();
  gr->add_option("--out", out_path, "DOT output path");
  add_common(gr, gr_o);

  CLI::App* iso = app.add_subcommand("iso", "decide orthogonality-graph isomorphism");
  iso->add_option("--a", a_path, "first state-set JSON path")->required();
  iso->add_option("--b", b_path, "second state-set JSON path")->required();
  iso->add_flag("--allow-party-swap", allow_swap,
                "also accept mappings exchanging the parties");
  add_common(iso, iso_o);

  CLI::App* cmp = app.add_subcommand("complete", "append the middle-grid states");
  cmp->add_option("--in", in_path, "state-set JSON path")->required();
  cmp->add_option("--out", out_path, "completed-set JSON path");
  add_common(cmp, cmp_o);

  CLI::App* rep = app.add_subcommand("report", "family comparison table");
  rep->add_option("--m", m, "Alice dimension")->required();
  rep->add_option("--n", n, "Bob dimension")->required();
  add_common(rep, rep_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_generate(family, m, n, out_path, gen_o);
    if (chk->parsed()) return cmd_check(in_path, chk_o);
    if (gr->parsed()) return cmd_graph(in_path, side, out_path, gr_o);
    if (iso->parsed()) return cmd_iso(a_path, b_path, allow_swap, iso_o);
    if (cmp->parsed()) return cmd_complete(in_path, out_path, cmp_o);
    if (rep->parsed()) return cmd_report(m, n, rep_o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("nlops");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace nlops
