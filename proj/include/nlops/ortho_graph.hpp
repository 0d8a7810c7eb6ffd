// Orthogonality graphs: one vertex per state, each pair of vertices colored
// by the side (A, B, or both) on which the two states are orthogonal, plus
// DOT export and exact color-preserving isomorphism testing.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlops/states.hpp"

namespace nlops {

struct OrthoGraph {
  std::vector<std::string> vertices;  // state labels, generation order
  // unordered pair (i < j) -> side label; flat upper-triangle storage
  std::vector<std::optional<Side>> edges;

  int size() const { return static_cast<int>(vertices.size()); }
  int pair_index(int i, int j) const;  // requires i != j
  std::optional<Side> edge(int i, int j) const;
};

// Labels every pair via orthogonality_side. Throws on sets with a pair that
// is orthogonal on neither side.
OrthoGraph build_graph(const StateSet& s, double tol = kOrthoTol);

struct EdgeCounts {
  int a = 0;     // |E_A|: pairs labeled A or Both
  int b = 0;     // |E_B|: pairs labeled B or Both
  int both = 0;  // pairs labeled Both
};

EdgeCounts edge_counts(const OrthoGraph& g);

enum class IsoOutcome { Isomorphic, NotIsomorphic, BudgetExceeded };

struct IsoResult {
  IsoOutcome outcome = IsoOutcome::NotIsomorphic;
  std::vector<int> mapping;  // g1 vertex index -> g2 vertex index
  std::string obstruction;   // filled when not isomorphic
  long long nodes_expanded = 0;
};

// Exact decision of color-preserving isomorphism (colors A-only, B-only,
// Both) by backtracking with degree-signature pruning. Any returned mapping
// is re-verified edge by edge before being reported. allow_party_swap also
// accepts mappings that exchange the roles of the two parties (A-edges onto
// B-edges); budget caps the number of search nodes.
IsoResult check_isomorphic(const OrthoGraph& g1, const OrthoGraph& g2,
                           bool allow_party_swap = false,
                           long long budget = 10'000'000);

enum class DotSide { A, B, Overlay };

// Graphviz DOT text with deterministic vertex and edge order. Side A draws
// E_A solid, side B draws E_B dashed; overlay draws A-only solid, B-only
// dashed and Both bold.
std::string to_dot(const OrthoGraph& g, DotSide side);

}  // namespace nlops
