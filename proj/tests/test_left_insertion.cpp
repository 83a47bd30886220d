#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_util.hpp"

using namespace psmon;
using psmon::test::cols;
using psmon::test::tab;
using psmon::test::W;

TEST_CASE("left insertion, worked examples") {
  const Tableau before =
      tab(Variant::Left, {"6421", "831", "731", "5432", "853"});
  // Situation (2): the pending column is eventually absorbed whole.
  CHECK(insert_left(Symbol{4}, before).columns ==
        cols({"421", "6431", "8731", "5432", "853"}));
  // Situation (3): the pending column is passed through to the end.
  CHECK(insert_left(Symbol{2}, before).columns ==
        cols({"21", "6421", "831", "732", "543", "853"}));
}

TEST_CASE("left insertion into the empty tableau") {
  CHECK(insert_left(Symbol{5}, Tableau{Variant::Left, {}}) ==
        tab(Variant::Left, {"5"}));
  CHECK(insert_left(Symbol{5}, Tableau{Variant::Right, {}}) ==
        tab(Variant::Right, {"5"}));
}

TEST_CASE("right-variant left insertion against the prepend oracle") {
  for (const Word& w : words_up_to(2, 6)) {
    const Tableau t = from_word_right(w, Variant::Right);
    for (Symbol a = 1; a <= 2; ++a) {
      Word prepended{a};
      prepended.insert(prepended.end(), w.begin(), w.end());
      REQUIRE(insert_left(a, t) == from_word_right(prepended, Variant::Right));
    }
  }
}

TEST_CASE("left PS algorithm for words") {
  CHECK(from_word_left(W("254263542"), Variant::Left).columns ==
        cols({"2", "542", "632", "54"}));
  CHECK(from_word_left(W("e"), Variant::Left).empty());
  CHECK(from_word_left(W("256423542"), Variant::Right).columns ==
        cols({"222", "543", "654"}));
}

TEST_CASE("insertion step classifier") {
  CHECK(classify_insertion_step(W("64"), W("831"), Variant::Left) ==
        InsertionCase::A);
  CHECK(classify_insertion_step(W("2"), W("1"), Variant::Left) ==
        InsertionCase::B1);
  CHECK(classify_insertion_step(W("21"), W("2"), Variant::Left) ==
        InsertionCase::B2);
  CHECK_THROWS_AS(classify_insertion_step(W("12"), W("1"), Variant::Left),
                  std::invalid_argument);
}

TEST_CASE("both insertion directions agree") {
  for (Variant v : {Variant::Left, Variant::Right}) {
    for (const Word& w : words_up_to(3, 8)) {
      REQUIRE(from_word_left(w, v) == from_word_right(w, v));
    }
  }
}

TEST_CASE("left insertion equals insertion of the prepended word") {
  for (Variant v : {Variant::Left, Variant::Right}) {
    for (const Word& w : words_up_to(3, 7)) {
      const Tableau t = from_word_right(w, v);
      for (Symbol a = 1; a <= 3; ++a) {
        Word prepended{a};
        prepended.insert(prepended.end(), w.begin(), w.end());
        REQUIRE(insert_left(a, t) == from_word_right(prepended, v));
      }
    }
  }
}

namespace {

// Replays one left insertion through the step classifier, recording the case
// of every step.
std::vector<InsertionCase> step_cases(Symbol a, const Tableau& t) {
  std::vector<InsertionCase> cases;
  Column pending{a};
  for (const Column& col : t.columns) {
    if (pending.empty()) {
      break;
    }
    cases.push_back(classify_insertion_step(pending, col, t.variant));
    switch (cases.back()) {
      case InsertionCase::B1:
        pending.clear();
        break;
      case InsertionCase::B2:
        pending = col;
        break;
      case InsertionCase::A: {
        const Symbol m = pending.back();
        std::size_t s = 0;
        while (s < col.size() &&
               !(t.variant == Variant::Left ? col[s] < m : col[s] <= m)) {
          ++s;
        }
        pending = Column(col.begin(), col.begin() + s);
        break;
      }
    }
  }
  return cases;
}

}  // namespace

TEST_CASE("once an insertion reaches case B it never returns to case A") {
  for (Variant v : {Variant::Left, Variant::Right}) {
    for (const Word& w : words_up_to(3, 7)) {
      const Tableau t = from_word_right(w, v);
      for (Symbol a = 1; a <= 3; ++a) {
        bool seen_b = false;
        for (InsertionCase c : step_cases(a, t)) {
          if (c == InsertionCase::A) {
            REQUIRE_FALSE(seen_b);
          } else {
            seen_b = true;
          }
        }
      }
    }
  }
}

TEST_CASE("left insertion stays within the quadratic comparison budget") {
  std::mt19937_64 rng(20240229);
  for (std::size_t n : {64u, 128u, 256u, 512u}) {
    // adversarial: increasing word
    BasicWord<CountingSymbol> increasing;
    for (std::size_t i = 1; i <= n; ++i) {
      increasing.push_back(CountingSymbol{static_cast<Symbol>(i)});
    }
    CountingSymbol::reset();
    from_word_left(increasing, Variant::Left);
    REQUIRE(CountingSymbol::comparisons <= 1 + n * n);

    // random over a small alphabet
    BasicWord<CountingSymbol> random;
    std::uniform_int_distribution<Symbol> dist(1, 3);
    for (std::size_t i = 0; i < n; ++i) {
      random.push_back(CountingSymbol{dist(rng)});
    }
    for (Variant v : {Variant::Left, Variant::Right}) {
      CountingSymbol::reset();
      from_word_left(random, v);
      REQUIRE(CountingSymbol::comparisons <= 1 + n * n);
    }
  }
}
