#include "nlops/ortho_graph.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace nlops {

int OrthoGraph::pair_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  // row-major upper triangle of a size() x size() grid
  return i * (2 * size() - i - 1) / 2 + (j - i - 1);
}

std::optional<Side> OrthoGraph::edge(int i, int j) const {
  return edges[pair_index(i, j)];
}

OrthoGraph build_graph(const StateSet& s, double tol) {
  require_valid(s, tol);
  OrthoGraph g;
  for (const ProductState& st : s.states) g.vertices.push_back(st.label);
  g.edges.resize(static_cast<std::size_t>(s.size()) * (s.size() - 1) / 2);
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      g.edges[g.pair_index(i, j)] =
          orthogonality_side(s.states[i], s.states[j], tol);
  return g;
}

EdgeCounts edge_counts(const OrthoGraph& g) {
  EdgeCounts c;
  for (const std::optional<Side>& e : g.edges) {
    if (!e) continue;
    if (*e == Side::A || *e == Side::Both) ++c.a;
    if (*e == Side::B || *e == Side::Both) ++c.b;
    if (*e == Side::Both) ++c.both;
  }
  return c;
}

namespace {

// 0=A, 1=B, 2=Both, 3=no edge
int color_code(const std::optional<Side>& e) {
  if (!e) return 3;
  switch (*e) {
    case Side::A: return 0;
    case Side::B: return 1;
    case Side::Both: return 2;
  }
  return 3;
}

// swapping the parties exchanges A and B edges; Both and no-edge stay put
int swap_color(int c) { return c == 0 ? 1 : (c == 1 ? 0 : c); }

using Signature = std::array<int, 4>;

std::vector<Signature> signatures(const OrthoGraph& g, bool swapped) {
  std::vector<Signature> sig(g.size(), Signature{0, 0, 0, 0});
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      int c = color_code(g.edge(i, j));
      if (swapped) c = swap_color(c);
      ++sig[i][static_cast<std::size_t>(c)];
    }
  }
  return sig;
}

struct SearchState {
  const OrthoGraph& g1;
  const OrthoGraph& g2;
  bool swapped;  // interpret g2 colors with A and B exchanged
  long long budget;
  long long nodes = 0;
  std::vector<int> map;   // g1 -> g2, -1 unassigned
  std::vector<bool> used;

  bool exceeded = false;

  int g2_color(int i, int j) const {
    const int c = color_code(g2.edge(i, j));
    return swapped ? swap_color(c) : c;
  }

  bool extend(int v, const std::vector<Signature>& s1,
              const std::vector<Signature>& s2) {
    if (v == g1.size()) return true;
    for (int w = 0; w < g2.size(); ++w) {
      if (used[w] || s1[v] != s2[w]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u) {
        if (color_code(g1.edge(u, v)) != g2_color(map[u], w)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (++nodes > budget) {
        exceeded = true;
        return false;
      }
      map[v] = w;
      used[w] = true;
      if (extend(v + 1, s1, s2)) return true;
      if (exceeded) return false;
      map[v] = -1;
      used[w] = false;
    }
    return false;
  }
};

std::string count_obstruction(const EdgeCounts& c1, const EdgeCounts& c2) {
  std::ostringstream os;
  if (c1.a != c2.a)
    os << "A-edge count " << c1.a << " != " << c2.a;
  else if (c1.b != c2.b)
    os << "B-edge count " << c1.b << " != " << c2.b;
  else
    os << "Both-edge count " << c1.both << " != " << c2.both;
  return os.str();
}

bool verify_mapping(const OrthoGraph& g1, const OrthoGraph& g2,
                    const std::vector<int>& map, bool swapped) {
  for (int i = 0; i < g1.size(); ++i) {
    for (int j = i + 1; j < g1.size(); ++j) {
      int c1 = color_code(g1.edge(i, j));
      int c2 = color_code(g2.edge(map[i], map[j]));
      if (swapped) c2 = swap_color(c2);
      if (c1 != c2) return false;
    }
  }
  return true;
}

IsoResult try_direction(const OrthoGraph& g1, const OrthoGraph& g2,
                        bool swapped, long long budget) {
  IsoResult res;

  EdgeCounts c1 = edge_counts(g1);
  EdgeCounts c2 = edge_counts(g2);
  if (swapped) std::swap(c2.a, c2.b);
  if (c1.a != c2.a || c1.b != c2.b || c1.both != c2.both) {
    res.outcome = IsoOutcome::NotIsomorphic;
    res.obstruction = count_obstruction(c1, c2);
    return res;
  }

  std::vector<Signature> s1 = signatures(g1, false);
  std::vector<Signature> s2 = signatures(g2, swapped);
  std::vector<Signature> m1 = s1, m2 = s2;
  std::sort(m1.begin(), m1.end());
  std::sort(m2.begin(), m2.end());
  if (m1 != m2) {
    res.outcome = IsoOutcome::NotIsomorphic;
    res.obstruction = "per-color degree multisets differ";
    return res;
  }

  SearchState st{g1, g2, swapped, budget, 0,
                 std::vector<int>(g1.size(), -1),
                 std::vector<bool>(g2.size(), false)};
  const bool found = st.extend(0, s1, s2);
  res.nodes_expanded = st.nodes;
  if (st.exceeded) {
    res.outcome = IsoOutcome::BudgetExceeded;
    res.obstruction = "search budget exceeded";
    return res;
  }
  if (!found) {
    res.outcome = IsoOutcome::NotIsomorphic;
    res.obstruction = "exhaustive search found no color-preserving bijection";
    return res;
  }
  if (!verify_mapping(g1, g2, st.map, swapped))
    throw std::logic_error("isomorphism search returned an invalid mapping");
  res.outcome = IsoOutcome::Isomorphic;
  res.mapping = st.map;
  return res;
}

}  // namespace

IsoResult check_isomorphic(const OrthoGraph& g1, const OrthoGraph& g2,
                           bool allow_party_swap, long long budget) {
  if (g1.size() != g2.size()) {
    IsoResult res;
    res.outcome = IsoOutcome::NotIsomorphic;
    res.obstruction = "vertex count " + std::to_string(g1.size()) +
                      " != " + std::to_string(g2.size());
    return res;
  }
  IsoResult direct = try_direction(g1, g2, false, budget);
  if (direct.outcome == IsoOutcome::Isomorphic || !allow_party_swap)
    return direct;

  IsoResult swapped = try_direction(g1, g2, true, budget);
  if (swapped.outcome == IsoOutcome::Isomorphic) return swapped;
  if (direct.outcome == IsoOutcome::BudgetExceeded ||
      swapped.outcome == IsoOutcome::BudgetExceeded) {
    swapped.outcome = IsoOutcome::BudgetExceeded;
    swapped.obstruction = "search budget exceeded";
    return swapped;
  }
  swapped.obstruction =
      "not isomorphic directly (" + direct.obstruction +
      ") nor under party swap (" + swapped.obstruction + ")";
  return swapped;
}

std::string to_dot(const OrthoGraph& g, DotSide side) {
  std::ostringstream os;
  os << "graph ortho {\n";
  for (const std::string& v : g.vertices) os << "  \"" << v << "\";\n";
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      const std::optional<Side> e = g.edge(i, j);
      if (!e) continue;
      const char* style = nullptr;
      switch (side) {
        case DotSide::A:
          if (*e == Side::A || *e == Side::Both) style = "solid";
          break;
        case DotSide::B:
          if (*e == Side::B || *e == Side::Both) style = "dashed";
          break;
        case DotSide::Overlay:
          style = *e == Side::A ? "solid" : (*e == Side::B ? "dashed" : "bold");
          break;
      }
      if (!style) continue;
      os << "  \"" << g.vertices[i] << "\" -- \"" << g.vertices[j]
         << "\" [style=" << style << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace nlops
