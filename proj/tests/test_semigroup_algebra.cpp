#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <optional>
#include <vector>

#include "lps/length_structure.hpp"
#include "lps/semigroup_algebra.hpp"

using lps::ElementSet;
using lps::Transformation;
using lps::Variant;

namespace {

Transformation t(std::vector<int> images) {
  return Transformation::make(static_cast<int>(images.size()), images);
}

// Generating sets for T_n(1), n = 2..5.
const std::vector<std::vector<std::vector<int>>> kGenerators = {
    {{2, 1}},
    {{2, 1, 2}, {3, 2, 1}},
    {{2, 3, 2, 1}, {3, 4, 3, 2}, {4, 3, 2, 1}},
    {{2, 3, 4, 5, 4}, {3, 2, 1, 2, 3}, {4, 3, 2, 1, 2}, {5, 4, 3, 2, 1}},
};

}  // namespace

TEST_CASE("closure reproduces T_n(1) from its generators",
          "[semigroup_algebra]") {
  const std::uint64_t expected_size[] = {2, 6, 16, 42};
  for (int n = 2; n <= 5; ++n) {
    std::vector<Transformation> gens;
    for (const auto& images : kGenerators[static_cast<std::size_t>(n - 2)]) {
      gens.push_back(Transformation::make(n, images));
    }
    ElementSet closed = lps::closure(gens);
    INFO("n = " << n);
    REQUIRE(closed.size() == expected_size[n - 2]);
    REQUIRE(closed == lps::enumerate({n, 1, Variant::preserving}));

    lps::ClosureOptions parallel;
    parallel.workers = 3;
    REQUIRE(lps::closure(gens, parallel) == closed);
  }
}

TEST_CASE("closure rejects bad inputs and enforces its budget",
          "[semigroup_algebra]") {
  REQUIRE_THROWS_AS(lps::closure({}), lps::error);

  // These two maps generate far more than 10 elements.
  lps::ClosureOptions tiny;
  tiny.budget = 10;
  REQUIRE_THROWS_WITH(
      lps::closure({t({2, 3, 4, 1}), t({1, 1, 3, 4})}, tiny),
      Catch::Matchers::ContainsSubstring("capacity budget"));
}

TEST_CASE("closure_defect finds the lex-first escaping product",
          "[semigroup_algebra]") {
  // A 3-cycle alone is not closed: its square escapes.
  ElementSet not_closed({t({2, 3, 1})});
  auto defect = lps::closure_defect(not_closed);
  REQUIRE(defect.has_value());
  REQUIRE(defect->a == t({2, 3, 1}));
  REQUIRE(defect->b == t({2, 3, 1}));
  REQUIRE(defect->product == t({3, 1, 2}));

  ElementSet closed = lps::enumerate({5, 2, Variant::preserving});
  REQUIRE_FALSE(lps::closure_defect(closed).has_value());
  REQUIRE_FALSE(lps::closure_defect(closed, 4).has_value());
}

TEST_CASE("witness_rank scans in canonical order", "[semigroup_algebra]") {
  ElementSet s53 = lps::enumerate({5, 3, Variant::preserving});
  REQUIRE(lps::witness_rank(t({1, 1, 3, 4, 4}), s53) == 2);
  REQUIRE(s53[2] == t({1, 1, 3, 4, 4}));  // its own witness, idempotent-like

  ElementSet s61 = lps::enumerate({6, 1, Variant::preserving});
  REQUIRE(lps::witness_rank(t({1, 2, 3, 2, 3, 4}), s61) == -1);
  REQUIRE(lps::is_regular_element(t({1, 2, 3, 4, 5, 6}), s61).has_value());
  REQUIRE_FALSE(lps::is_regular_element(t({1, 2, 3, 2, 3, 4}), s61)
                    .has_value());
}

TEST_CASE("parallel witness search matches the sequential one",
          "[semigroup_algebra]") {
  // T_7(4) has 1512 elements, enough to hit the partitioned scan.
  ElementSet s = lps::enumerate({7, 4, Variant::preserving});
  for (const Transformation& a : s) {
    std::ptrdiff_t rank = lps::witness_rank(a, s);
    std::optional<Transformation> w = lps::is_regular_element(a, s, 3);
    REQUIRE(w.has_value() == (rank >= 0));
    if (rank >= 0) {
      REQUIRE(*w == s[static_cast<std::size_t>(rank)]);
    }
  }
}

TEST_CASE("is_regular_semigroup reports the frozen irregular set",
          "[semigroup_algebra]") {
  ElementSet s = lps::enumerate({6, 1, Variant::preserving});
  lps::RegularityReport report =
      lps::is_regular_semigroup(s, "T_6(1)");
  REQUIRE(report.description == "T_6(1)");
  REQUIRE_FALSE(report.regular);
  std::vector<Transformation> expected = {
      t({1, 2, 3, 2, 3, 4}), t({2, 3, 4, 3, 4, 5}), t({3, 4, 5, 4, 5, 6}),
      t({4, 3, 2, 3, 2, 1}), t({5, 4, 3, 4, 3, 2}), t({6, 5, 4, 5, 4, 3})};
  REQUIRE(report.irregular_elements() == expected);

  // The deterministic probe counts are a pure function of the ranks.
  std::uint64_t scanned = 0;
  for (std::size_t i = 0; i < report.elements.size(); ++i) {
    std::int32_t r = report.witness_rank[i];
    scanned += r >= 0 ? static_cast<std::uint64_t>(r) + 1
                      : report.elements.size();
  }
  REQUIRE(report.elements_scanned == scanned);
  REQUIRE(report.compositions == 2 * scanned);

  // Worker count changes nothing observable.
  lps::RegularityReport parallel =
      lps::is_regular_semigroup(s, "T_6(1)", 4);
  REQUIRE(parallel.witness_rank == report.witness_rank);
  REQUIRE(parallel.elements_scanned == report.elements_scanned);

  lps::RegularityReport star =
      lps::is_regular_semigroup(lps::enumerate({6, 2, Variant::reflecting}),
                                "T*_6(2)");
  REQUIRE(star.regular);
  REQUIRE(star.irregular_elements().empty());
}

TEST_CASE("is_regular_semigroup rejects non-closed input",
          "[semigroup_algebra]") {
  ElementSet not_closed({t({2, 3, 1})});
  REQUIRE_THROWS_WITH(
      lps::is_regular_semigroup(not_closed),
      Catch::Matchers::ContainsSubstring("not composition-closed"));
}

TEST_CASE("canonical witnesses are the smallest ones", "[semigroup_algebra]") {
  // In T_6(2) the element [1 1 3 3 5 5] has canonical witness [1 1 3 3 5 1].
  ElementSet s = lps::enumerate({6, 2, Variant::preserving});
  lps::RegularityReport report = lps::is_regular_semigroup(s, "T_6(2)");
  std::ptrdiff_t i = s.index_of(t({1, 1, 3, 3, 5, 5}));
  REQUIRE(i >= 0);
  REQUIRE(report.witness_rank[static_cast<std::size_t>(i)] == 2);
  REQUIRE(report.witness_of(static_cast<std::size_t>(i)) ==
          t({1, 1, 3, 3, 5, 1}));
}
