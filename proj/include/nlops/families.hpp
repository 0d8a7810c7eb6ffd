// Generators for the shipped families of orthogonal product states, the
// middle-grid completion, and closed-form set sizes.
#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "nlops/states.hpp"

namespace nlops {

enum class FamilyId {
  Feng8,          // 8-state domino set in 3x3
  Shi4x4,         // fixed 12-state Fourier set in 4x4
  Shi,            // Fourier construction, 2(m+n)-4 states, m,n >= 3
  NovelOddOdd,    // paired-domino construction, m,n odd >= 3
  NovelEvenEven,  // Fourier-plus-domino construction, m,n even >= 4
  NovelEvenOdd,   // mixed construction, m even >= 4, n odd >= 3
  Novel,          // dispatcher over the three above (any parity, m,n >= 3)
  Zhang3x3,       // fixed 8-state set in 3x3
  Zhang4x4,       // fixed 12-state set in 4x4
  Novel5x5,       // fixed 16-state domino set in 5x5
  Shi5x5,         // Shi at (5,5)
};

const std::vector<FamilyId>& all_families();
std::string_view family_token(FamilyId f);
std::optional<FamilyId> family_from_token(std::string_view token);

// The unique valid (m, n) of fixed-size families, nullopt for parametric ones.
std::optional<std::pair<int, int>> fixed_dims(FamilyId f);
bool family_accepts(FamilyId f, int m, int n);
std::string family_constraint(FamilyId f);

// States come out in the canonical listing order with labels phi1, phi2, ...
// Throws std::invalid_argument outside the family's validity region.
StateSet generate(FamilyId f, int m, int n);

// Closed-form |generate(f, m, n)|; 2(m+n)-4 for the parametric families.
long count_formula(FamilyId f, int m, int n);

// Appends the middle-grid states |i>|j>, 1 <= i <= m-2, 1 <= j <= n-2.
// Throws if any grid state fails orthogonality against the existing set,
// naming the offending pair.
StateSet complete_with_grid(const StateSet& s, double tol = kOrthoTol);

// True iff |states| == m*n and the joint-space vectors have full numerical
// rank m*n (threshold rank_tol relative to the largest singular value).
bool is_complete_basis(const StateSet& s, double rank_tol = kRankTol);

}  // namespace nlops
