#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "test_util.hpp"

using namespace psmon;
using psmon::test::cols;
using psmon::test::tab;
using psmon::test::W;

TEST_CASE("right insertion of a symbol") {
  CHECK(insert_right(tab(Variant::Left, {"2", "542", "632", "5"}), Symbol{4}) ==
        tab(Variant::Left, {"2", "542", "632", "54"}));
  CHECK(insert_right(Tableau{Variant::Left, {}}, Symbol{2}) ==
        tab(Variant::Left, {"2"}));
  CHECK(insert_right(tab(Variant::Right, {"21"}), Symbol{1}) ==
        tab(Variant::Right, {"211"}));
}

TEST_CASE("PS algorithm for words") {
  CHECK(from_word_right(W("254263542"), Variant::Left).columns ==
        cols({"2", "542", "632", "54"}));
  CHECK(from_word_right(W("256423542"), Variant::Right).columns ==
        cols({"222", "543", "654"}));
  CHECK(from_word_right(W("e"), Variant::Left).empty());
}

TEST_CASE("figure-style insertion trace") {
  // Stepwise lPS insertion of 254263542.
  Tableau t{Variant::Left, {}};
  const std::vector<std::vector<std::string>> expected = {
      {"2"},
      {"2", "5"},
      {"2", "54"},
      {"2", "542"},
      {"2", "542", "6"},
      {"2", "542", "63"},
      {"2", "542", "63", "5"},
      {"2", "542", "63", "54"},
      {"2", "542", "632", "54"},
  };
  const Word w = W("254263542");
  for (std::size_t i = 0; i < w.size(); ++i) {
    t = insert_right(t, w[i]);
    REQUIRE(t.columns == cols(expected[i]));
  }
}

TEST_CASE("column reading") {
  CHECK(column_reading(tab(Variant::Left, {"2", "542", "632", "54"})) ==
        W("254263254"));
  CHECK(column_reading(tab(Variant::Right, {"222", "543", "654"})) ==
        W("222543654"));
  CHECK(column_reading(Tableau{}).empty());
}

TEST_CASE("shape") {
  CHECK(shape(tab(Variant::Left, {"2", "542", "632", "54"})) ==
        Shape{1, 3, 3, 2});
  CHECK(shape(tab(Variant::Right, {"222", "543", "654"})) == Shape{3, 3, 3});
  CHECK(shape(Tableau{}).empty());
}

TEST_CASE("canonical words") {
  CHECK(is_canonical_word(W("254263254"), Variant::Left));
  CHECK_FALSE(is_canonical_word(W("231"), Variant::Left));
  // oracle for the rejection: insertion reorders the word
  CHECK(column_reading(from_word_right(W("231"), Variant::Left)) == W("213"));
  CHECK(is_canonical_word(W("e"), Variant::Left));
  CHECK(is_canonical_word(W("e"), Variant::Right));
}

TEST_CASE("column configuration") {
  CHECK(column_configuration(W("254263542"), Variant::Left) ==
        cols({"2", "542", "632", "54"}));
  CHECK(column_configuration(W("24131"), Variant::Left) == cols({"21", "431"}));
  CHECK(column_configuration(W("7"), Variant::Right) == cols({"7"}));
}

TEST_CASE("tableau standardization") {
  const Word w = W("1321221");
  for (Variant v : {Variant::Left, Variant::Right}) {
    // R_x(std_x(w)) = Std_x(R_x(w)), both sides computed independently.
    const StandardizedWord sw =
        v == Variant::Left ? std_left(w) : std_right(w);
    CHECK(from_word_right(sw, v) == standardize_tableau(from_word_right(w, v)));
  }
  // All-distinct entries standardize with every index 1.
  const Tableau distinct = from_word_right(W("36142"), Variant::Left);
  const StandardizedTableau st = standardize_tableau(distinct);
  for (const auto& c : st.columns) {
    for (IndexedSymbol s : c) {
      REQUIRE(s.index == 1);
    }
  }
  CHECK(standardize_tableau(Tableau{}).empty());
}

TEST_CASE("tableau de-standardization") {
  const Tableau b = from_word_right(W("254263542"), Variant::Left);
  CHECK(destandardize_tableau(standardize_tableau(b)) == b);
  CHECK(destandardize_tableau(StandardizedTableau{}).empty());
  const Word w = W("1321221");
  for (Variant v : {Variant::Left, Variant::Right}) {
    const StandardizedWord sw =
        v == Variant::Left ? std_left(w) : std_right(w);
    CHECK(destandardize_tableau(from_word_right(sw, v)) ==
          from_word_right(w, v));
  }
  // Erasing indexes may break the column invariant for hand-made input.
  StandardizedTableau bad;
  bad.variant = Variant::Left;
  bad.columns = {{IndexedSymbol{1, 1}, IndexedSymbol{1, 2}}};
  CHECK_THROWS_AS(destandardize_tableau(bad), std::invalid_argument);
}

TEST_CASE("insertion preserves the tableau invariants") {
  for (Variant v : {Variant::Left, Variant::Right}) {
    for (const Word& w : words_up_to(3, 8)) {
      const Tableau t = from_word_right(w, v);
      REQUIRE(is_valid_tableau(t));
      REQUIRE(t.box_count() == w.size());
      REQUIRE(evaluation(column_reading(t)) == evaluation(w));
    }
  }
}

TEST_CASE("canonicalization is idempotent") {
  for (Variant v : {Variant::Left, Variant::Right}) {
    for (const Word& w : words_up_to(3, 8)) {
      const Tableau t = from_word_right(w, v);
      REQUIRE(from_word_right(column_reading(t), v) == t);
    }
  }
}

TEST_CASE("insertion is a bijection on canonical words") {
  for (Variant v : {Variant::Left, Variant::Right}) {
    std::size_t canonical_count = 0;
    std::set<Word> readings;
    for (const Word& w : words_up_to(3, 6)) {
      if (!is_canonical_word(w, v)) {
        continue;
      }
      ++canonical_count;
      REQUIRE(column_reading(from_word_right(w, v)) == w);
      readings.insert(column_reading(from_word_right(w, v)));
    }
    REQUIRE(readings.size() == canonical_count);
  }
}

namespace {

struct BoxPosition {
  std::size_t column = 0;
  std::size_t height = 0;  // from the bottom, 0-based
};

// Insertion replayed with per-input-position box tracking: inserting at the
// bottom of a column lifts every box already in it.
std::vector<BoxPosition> traced_positions(const Word& w, Variant v) {
  Tableau t{v, {}};
  std::vector<BoxPosition> boxes;
  for (Symbol a : w) {
    const std::size_t col = insertion_column(t, a);
    for (BoxPosition& b : boxes) {
      if (b.column == col) {
        ++b.height;
      }
    }
    boxes.push_back(BoxPosition{col, 0});
    insert_right_inplace(t, a);
  }
  // Cross-check the tracked positions against the final tableau.
  for (std::size_t i = 0; i < w.size(); ++i) {
    const BoxPosition& b = boxes[i];
    const Column& c = t.columns[b.column];
    REQUIRE(c[c.size() - 1 - b.height] == w[i]);
  }
  return boxes;
}

}  // namespace

TEST_CASE("placement of equal-or-increasing symbol pairs") {
  for (Variant v : {Variant::Left, Variant::Right}) {
    for (const Word& w : words_up_to(3, 7)) {
      const std::vector<BoxPosition> boxes = traced_positions(w, v);
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
          if (w[i] > w[j]) {
            continue;
          }
          const bool later_column = boxes[j].column > boxes[i].column;
          const bool same_column_below =
              v == Variant::Right && boxes[j].column == boxes[i].column &&
              boxes[j].height < boxes[i].height;
          REQUIRE((later_column || same_column_below));
        }
      }
    }
  }
}

TEST_CASE("standardization commutes with insertion") {
  for (Variant v : {Variant::Left, Variant::Right}) {
    for (const Word& w : words_up_to(3, 6)) {
      const StandardizedWord sw =
          v == Variant::Left ? std_left(w) : std_right(w);
      const StandardizedTableau lhs = from_word_right(sw, v);
      REQUIRE(lhs == standardize_tableau(from_word_right(w, v)));
      REQUIRE(destandardize_tableau(lhs) == from_word_right(w, v));
    }
  }
}
