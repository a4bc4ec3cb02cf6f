#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <utility>
#include <vector>

#include "lps/length_structure.hpp"

using lps::ElementSet;
using lps::SemigroupSpec;
using lps::Transformation;
using lps::Variant;

namespace {

Transformation t(std::vector<int> images) {
  return Transformation::make(static_cast<int>(images.size()), images);
}

// Frozen sizes |T_n(l)| and |T*_n(l)|, independently computed by brute force.
const std::map<std::pair<int, int>, std::pair<std::uint64_t, std::uint64_t>>
    kSizes = {
        {{2, 1}, {2, 2}},       {{3, 1}, {6, 6}},      {{3, 2}, {6, 2}},
        {{4, 1}, {16, 2}},      {{4, 2}, {16, 8}},     {{4, 3}, {32, 8}},
        {{5, 1}, {42, 2}},      {{5, 2}, {48, 20}},    {{5, 3}, {80, 8}},
        {{5, 4}, {250, 54}},    {{6, 1}, {104, 2}},    {{6, 2}, {144, 72}},
        {{6, 3}, {216, 48}},    {{6, 4}, {576, 32}},   {{6, 5}, {2592, 512}},
        {{7, 1}, {252, 2}},     {{7, 2}, {384, 12}},   {{7, 3}, {640, 112}},
        {{7, 4}, {1512, 48}},   {{7, 5}, {5488, 216}}, {{7, 6}, {33614, 6250}},
};

}  // namespace

TEST_CASE("variant tokens round-trip", "[length_structure]") {
  REQUIRE(lps::variant_token(Variant::preserving) == std::string("plain"));
  REQUIRE(lps::variant_token(Variant::reflecting) == std::string("star"));
  REQUIRE(lps::variant_token(Variant::full) == std::string("full"));
  REQUIRE(lps::variant_from_token("star") == Variant::reflecting);
  REQUIRE_FALSE(lps::variant_from_token("bogus").has_value());
}

TEST_CASE("spec validation and naming", "[length_structure]") {
  SemigroupSpec spec{5, 2, Variant::preserving};
  REQUIRE_NOTHROW(spec.validate());
  REQUIRE(spec.name() == "T_5(2)");
  REQUIRE(SemigroupSpec{5, 2, Variant::reflecting}.name() == "T*_5(2)");
  REQUIRE(SemigroupSpec{5, 1, Variant::full}.name() == "T_5");
  REQUIRE(spec.cache_file() == "T_5_2_plain.txt");
  REQUIRE_THROWS_AS((SemigroupSpec{1, 1, Variant::preserving}.validate()),
                    lps::error);
  REQUIRE_THROWS_AS((SemigroupSpec{5, 0, Variant::preserving}.validate()),
                    lps::error);
  REQUIRE_THROWS_AS((SemigroupSpec{5, 5, Variant::preserving}.validate()),
                    lps::error);
}

TEST_CASE("membership predicates on known elements", "[length_structure]") {
  // Distance-3 pairs in X_5 collapse under x -> min(x, something) maps.
  Transformation a = t({1, 1, 1, 4, 4});
  REQUIRE(lps::preserves_length(a, 3));
  REQUIRE_FALSE(lps::reflects_length(a, 3));
  REQUIRE(lps::is_member(a, {5, 3, Variant::preserving}));
  REQUIRE_FALSE(lps::is_member(a, {5, 3, Variant::reflecting}));
  REQUIRE(lps::is_member(a, {5, 3, Variant::full}));
  REQUIRE_FALSE(lps::is_member(a, {4, 3, Variant::full}));

  // The lex-first violated pair is reported, converse direction included.
  auto v = lps::first_violation(a, 3, Variant::reflecting);
  REQUIRE(v.has_value());
  REQUIRE(v->x == 1);
  REQUIRE(v->y == 5);
  REQUIRE(v->xa == 1);
  REQUIRE(v->ya == 4);
  REQUIRE(v->converse);
  REQUIRE_FALSE(lps::first_violation(a, 3, Variant::preserving).has_value());

  Transformation b = t({1, 1, 3, 3, 2});
  auto direct = lps::first_violation(b, 2, Variant::preserving);
  REQUIRE(direct.has_value());
  REQUIRE(direct->x == 3);
  REQUIRE(direct->y == 5);
  REQUIRE_FALSE(direct->converse);
}

TEST_CASE("class view partitions X_n when 2l <= n", "[length_structure]") {
  std::vector<lps::LengthClass> classes = lps::classes_view(5, 2);
  REQUIRE(classes.size() == 2);
  REQUIRE(classes[0].i == 1);
  REQUIRE(classes[0].m == 2);
  REQUIRE(classes[0].points == std::vector<int>{1, 3, 5});
  REQUIRE(classes[1].i == 2);
  REQUIRE(classes[1].m == 1);
  REQUIRE(classes[1].points == std::vector<int>{2, 4});
  REQUIRE_THROWS_AS(lps::classes_view(5, 3), lps::error);
}

TEST_CASE("decompose picks the regime from 2l vs n", "[length_structure]") {
  lps::Decomposition pm = lps::decompose(7, 5);
  REQUIRE(pm.regime == lps::Decomposition::Regime::pair_middle);
  REQUIRE(pm.pairs == std::vector<std::pair<int, int>>{{1, 6}, {2, 7}});
  REQUIRE(pm.middle == std::vector<int>{3, 4, 5});

  // Boundary 2l = n: pair-middle with empty middle.
  lps::Decomposition boundary = lps::decompose(6, 3);
  REQUIRE(boundary.regime == lps::Decomposition::Regime::pair_middle);
  REQUIRE(boundary.pairs ==
          std::vector<std::pair<int, int>>{{1, 4}, {2, 5}, {3, 6}});
  REQUIRE(boundary.middle.empty());

  lps::Decomposition cls = lps::decompose(7, 2);
  REQUIRE(cls.regime == lps::Decomposition::Regime::classes);
  REQUIRE(cls.classes.size() == 2);
  REQUIRE(cls.classes[0].points == std::vector<int>{1, 3, 5, 7});
}

TEST_CASE("enumerate reproduces the frozen size table", "[length_structure]") {
  for (const auto& [cell, sizes] : kSizes) {
    auto [n, l] = cell;
    if (n > 6) {
      continue;  // n = 7 sizes are covered by the acceptance suite
    }
    ElementSet plain = lps::enumerate({n, l, Variant::preserving});
    ElementSet star = lps::enumerate({n, l, Variant::reflecting});
    INFO("n = " << n << ", l = " << l);
    REQUIRE(plain.size() == sizes.first);
    REQUIRE(star.size() == sizes.second);
    // The reflecting variant is contained in the preserving one.
    for (const Transformation& a : star) {
      REQUIRE(plain.contains(a));
    }
  }
  REQUIRE(lps::enumerate({3, 1, Variant::full}).size() == 27);
}

TEST_CASE("backtracking equals naive filtering for n <= 5",
          "[length_structure]") {
  for (int n = 2; n <= 5; ++n) {
    for (int l = 1; l <= n - 1; ++l) {
      for (Variant v : {Variant::preserving, Variant::reflecting}) {
        SemigroupSpec spec{n, l, v};
        INFO(spec.name());
        REQUIRE(lps::enumerate(spec) == lps::enumerate_naive(spec));
      }
    }
  }
}

TEST_CASE("exact listings for the equality locus", "[length_structure]") {
  ElementSet t21 = lps::enumerate({2, 1, Variant::preserving});
  REQUIRE(t21.size() == 2);
  REQUIRE(t21[0] == t({1, 2}));
  REQUIRE(t21[1] == t({2, 1}));

  ElementSet t31 = lps::enumerate({3, 1, Variant::preserving});
  ElementSet expected({t({1, 2, 1}), t({1, 2, 3}), t({2, 1, 2}), t({2, 3, 2}),
                       t({3, 2, 1}), t({3, 2, 3})});
  REQUIRE(t31 == expected);
  REQUIRE(lps::enumerate({2, 1, Variant::reflecting}) == t21);
  REQUIRE(lps::enumerate({3, 1, Variant::reflecting}) == t31);
}

TEST_CASE("worker count never changes the enumeration", "[length_structure]") {
  SemigroupSpec spec{6, 2, Variant::preserving};
  lps::EnumerateOptions one;
  lps::EnumerateOptions three;
  three.workers = 3;
  lps::EnumerateOptions many;
  many.workers = 16;  // more workers than first-image blocks
  ElementSet base = lps::enumerate(spec, one);
  REQUIRE(lps::enumerate(spec, three) == base);
  REQUIRE(lps::enumerate(spec, many) == base);
}

TEST_CASE("budget capacity is enforced", "[length_structure]") {
  lps::EnumerateOptions options;
  options.budget = 100;
  REQUIRE_THROWS_WITH(
      lps::enumerate({6, 5, Variant::preserving}, options),
      Catch::Matchers::ContainsSubstring("capacity budget"));
}

TEST_CASE("cache round-trips and revalidates", "[length_structure]") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "lps_cache_test";
  fs::remove_all(dir);

  SemigroupSpec spec{5, 2, Variant::preserving};
  lps::EnumerateOptions options;
  options.cache_dir = dir.string();
  ElementSet first = lps::enumerate(spec, options);
  REQUIRE(fs::exists(dir / "T_5_2_plain.txt"));
  REQUIRE(lps::enumerate(spec, options) == first);

  // A corrupted cache entry is rejected and rebuilt, not trusted.
  {
    std::ofstream out(dir / "T_5_2_plain.txt");
    out << "# spec=T_5_2_plain size=1\n2 2 2 2 2\n";
  }
  REQUIRE(lps::enumerate(spec, options) == first);
  fs::remove_all(dir);
}
