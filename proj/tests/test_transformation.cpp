#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "lps/transformation.hpp"

using lps::compose;
using lps::identity;
using lps::Transformation;

TEST_CASE("make validates and indexes 1-based", "[transformation]") {
  Transformation a = Transformation::make(3, {2, 1, 2});
  REQUIRE(a.n() == 3);
  REQUIRE(a(1) == 2);
  REQUIRE(a(2) == 1);
  REQUIRE(a(3) == 2);
  REQUIRE(a.raw(0) == 1);  // raw() is the 0-based view: index and value
  REQUIRE(a.raw(2) == 1);
  REQUIRE_THROWS_AS(a(0), lps::error);
  REQUIRE_THROWS_AS(a(4), lps::error);
  REQUIRE_THROWS_AS(Transformation::make(3, {2, 1}), lps::error);
  REQUIRE_THROWS_AS(Transformation::make(3, {2, 1, 4}), lps::error);
  REQUIRE_THROWS_AS(Transformation::make(3, {2, 1, 0}), lps::error);
  REQUIRE_THROWS_AS(Transformation::make(0, {}), lps::error);
  REQUIRE_THROWS_AS(Transformation::make(13, std::vector<int>(13, 1)),
                    lps::error);
}

TEST_CASE("composition is left-to-right and associative", "[transformation]") {
  Transformation a = Transformation::make(3, {2, 1, 2});
  Transformation b = Transformation::make(3, {1, 1, 3});
  // x(ab) = (xa)b: 1 -> 2 -> 1, 2 -> 1 -> 1, 3 -> 2 -> 1.
  REQUIRE(compose(a, b) == Transformation::make(3, {1, 1, 1}));
  REQUIRE(compose(b, a) == Transformation::make(3, {2, 2, 2}));

  Transformation c = Transformation::make(3, {3, 2, 1});
  REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
  REQUIRE(compose(a, identity(3)) == a);
  REQUIRE(compose(identity(3), a) == a);
  REQUIRE_THROWS_AS(compose(a, identity(4)), lps::error);
}

TEST_CASE("ordering is (n, lex on image sequences)", "[transformation]") {
  Transformation a = Transformation::make(3, {1, 2, 3});
  Transformation b = Transformation::make(3, {1, 3, 1});
  Transformation c = Transformation::make(4, {1, 1, 1, 1});
  REQUIRE(a < b);
  REQUIRE(b < c);  // smaller n first
  REQUIRE(a.key() < b.key());

  // key order == lex order within fixed n, exhaustively for n = 3.
  std::vector<Transformation> all;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        all.push_back(Transformation::make(3, {i, j, k}));
      }
    }
  }
  REQUIRE(std::is_sorted(all.begin(), all.end()));
  for (std::size_t i = 1; i < all.size(); ++i) {
    REQUIRE(all[i - 1].key() < all[i].key());
  }
}

TEST_CASE("text format round-trips", "[transformation]") {
  Transformation a = Transformation::make(5, {1, 1, 3, 4, 4});
  REQUIRE(lps::format_text(a) == "1 1 3 4 4");
  REQUIRE(lps::parse_text("1 1 3 4 4") == a);
  REQUIRE(lps::parse_text("  1   1 3 4 4 ") == a);
  REQUIRE_THROWS_AS(lps::parse_text(""), lps::error);
  REQUIRE_THROWS_AS(lps::parse_text("1 2 x"), lps::error);
  REQUIRE_THROWS_AS(lps::parse_text("1 2 9"), lps::error);
}

TEST_CASE("image set and preimages", "[transformation]") {
  Transformation a = Transformation::make(5, {1, 1, 3, 4, 4});
  REQUIRE(lps::image_set(a) == std::vector<int>{1, 3, 4});
  REQUIRE(lps::preimage(a, 1) == std::vector<int>{1, 2});
  REQUIRE(lps::preimage(a, 4) == std::vector<int>{4, 5});
  REQUIRE(lps::preimage(a, 2).empty());
}
