#include <doctest.h>

#include "nlops/families.hpp"
#include "nlops/ortho_graph.hpp"
#include "test_util.hpp"

using namespace nlops;
using namespace nlops::test;

namespace {

std::vector<std::pair<int, int>> validity_grid(FamilyId f, int lo, int hi) {
  std::vector<std::pair<int, int>> out;
  for (int m = lo; m <= hi; ++m)
    for (int n = lo; n <= hi; ++n)
      if (family_accepts(f, m, n)) out.push_back({m, n});
  return out;
}

}  // namespace

TEST_CASE("every family instance is valid and matches its count formula") {
  for (FamilyId f : all_families()) {
    for (auto [m, n] : validity_grid(f, 3, 10)) {
      const StateSet s = generate(f, m, n);
      CAPTURE(family_token(f));
      CAPTURE(m);
      CAPTURE(n);
      CHECK(s.size() == count_formula(f, m, n));
      CHECK(s.size() == 2 * (m + n) - 4);
      CHECK(validate_set(s).valid);
      // canonical labels in listing order
      for (int k = 0; k < s.size(); ++k)
        CHECK(s.states[k].label == "phi" + std::to_string(k + 1));
    }
  }
}

TEST_CASE("count formula spot values") {
  CHECK(count_formula(FamilyId::Novel, 3, 3) == 8);
  CHECK(count_formula(FamilyId::Novel, 4, 4) == 12);
  CHECK(count_formula(FamilyId::Zhang4x4, 4, 4) == 12);
  CHECK(count_formula(FamilyId::Novel, 5, 5) == 16);
  CHECK_THROWS_AS(count_formula(FamilyId::Novel, 2, 5), std::invalid_argument);
}

TEST_CASE("dispatcher picks the right construction") {
  CHECK(generate(FamilyId::Novel, 5, 5).size() == 16);
  CHECK(generate(FamilyId::Novel, 4, 7).size() == 18);

  // at 3x3 the dispatcher reproduces the domino set exactly
  const StateSet a = generate(FamilyId::Novel, 3, 3);
  const StateSet b = generate(FamilyId::Feng8, 3, 3);
  REQUIRE(a.size() == b.size());
  for (int k = 0; k < a.size(); ++k) {
    CHECK(a.states[k].a == b.states[k].a);
    CHECK(a.states[k].b == b.states[k].b);
  }

  // odd/even comes from the even/odd construction with the parties swapped
  const StateSet eo = generate(FamilyId::NovelEvenOdd, 4, 3);
  const StateSet oe = generate(FamilyId::Novel, 3, 4);
  CHECK(oe.size() == eo.size());
  CHECK(sets_match_up_to_scalar(oe, swap_parties(eo)));
}

TEST_CASE("parameter validity is enforced") {
  CHECK_THROWS_AS(generate(FamilyId::Novel, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(generate(FamilyId::Feng8, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(generate(FamilyId::NovelEvenEven, 5, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate(FamilyId::NovelOddOdd, 4, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate(FamilyId::Shi, 2, 3), std::invalid_argument);
}

TEST_CASE("family tokens round trip") {
  for (FamilyId f : all_families()) {
    const auto back = family_from_token(family_token(f));
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
  CHECK(!family_from_token("nonsense").has_value());
}

TEST_CASE("fourier construction at 4x4 equals the fixed 12-state listing") {
  const StateSet a = generate(FamilyId::Shi, 4, 4);
  const StateSet b = generate(FamilyId::Shi4x4, 4, 4);
  REQUIRE(a.size() == b.size());
  for (int k = 0; k < a.size(); ++k)
    CHECK(states_proportional(a.states[k], b.states[k]));
}

TEST_CASE("fourier blocks are orthogonal on their own side") {
  for (auto [m, n] : {std::pair{3, 4}, {4, 5}, {5, 5}, {6, 4}}) {
    const StateSet s = generate(FamilyId::Shi, m, n);
    // blocks 1 and 3: fixed Alice factor, Fourier rows on Bob's side
    for (int base : {0, n + m - 2}) {
      for (int i = 0; i + 1 < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j)
          CHECK(relative_overlap(s.states[base + i].b, s.states[base + j].b) <
                1e-12);
    }
    // blocks 2 and 4: Fourier rows on Alice's side
    for (int base : {n - 1, 2 * n + m - 3}) {
      for (int i = 0; i + 1 < m - 1; ++i)
        for (int j = i + 1; j < m - 1; ++j)
          CHECK(relative_overlap(s.states[base + i].a, s.states[base + j].a) <
                1e-12);
    }
  }
}

TEST_CASE("fourier construction transposes under party swap") {
  // swapping the parties and reversing Bob's basis reproduces the generator
  // with (m, n) exchanged, state by state up to scalars
  for (auto [m, n] : {std::pair{3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 5}}) {
    StateSet swapped = swap_parties(generate(FamilyId::Shi, m, n));
    for (ProductState& st : swapped.states)
      st.b = st.b.reverse().eval();
    const StateSet direct = generate(FamilyId::Shi, n, m);
    CAPTURE(m);
    CAPTURE(n);
    CHECK(sets_match_up_to_scalar(swapped, direct));
    // and the orthogonality graphs agree as well
    const IsoResult iso = check_isomorphic(
        build_graph(swap_parties(generate(FamilyId::Shi, m, n))),
        build_graph(direct));
    CHECK(iso.outcome == IsoOutcome::Isomorphic);
  }
}

TEST_CASE("grid completion counts") {
  CHECK(complete_with_grid(generate(FamilyId::Novel, 3, 3)).size() == 9);
  CHECK(complete_with_grid(generate(FamilyId::Novel, 5, 5)).size() == 25);
}

TEST_CASE("grid completion rejects colliding sets") {
  // a complete basis already contains the grid states
  CHECK_THROWS_AS(complete_with_grid(computational_basis(3, 3)),
                  std::invalid_argument);
  // the zhang sets use the middle levels and are not grid-completable
  CHECK_THROWS_AS(complete_with_grid(generate(FamilyId::Zhang3x3, 3, 3)),
                  std::invalid_argument);
}

TEST_CASE("complete basis detection") {
  CHECK(is_complete_basis(computational_basis(3, 3)));
  CHECK(!is_complete_basis(generate(FamilyId::Novel, 4, 4)));
  CHECK(is_complete_basis(complete_with_grid(generate(FamilyId::Novel, 4, 4))));
}

TEST_CASE("grid completion yields complete bases across both families") {
  for (FamilyId f : {FamilyId::Novel, FamilyId::Shi}) {
    for (int m = 3; m <= 8; ++m) {
      for (int n = 3; n <= 8; ++n) {
        const StateSet full = complete_with_grid(generate(f, m, n));
        CAPTURE(family_token(f));
        CAPTURE(m);
        CAPTURE(n);
        CHECK(full.size() == m * n);
        CHECK(is_complete_basis(full));
      }
    }
  }
}
