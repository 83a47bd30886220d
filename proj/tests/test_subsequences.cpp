#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "test_util.hpp"

using namespace psmon;
using psmon::test::W;

TEST_CASE("decreasing subsequence") {
  const auto left = decreasing_subsequence(W("256423542"), Variant::Left);
  CHECK(left.word == W("2"));
  CHECK(left.positions == std::vector<std::size_t>{0});

  const auto right = decreasing_subsequence(W("256423542"), Variant::Right);
  CHECK(right.word == W("222"));
  CHECK(right.positions == std::vector<std::size_t>{0, 4, 8});

  CHECK(decreasing_subsequence(W("7"), Variant::Left).word == W("7"));
  CHECK(decreasing_subsequence(W("e"), Variant::Right).word.empty());
}

TEST_CASE("left-to-right minimal subsequences") {
  CHECK(minimal_subsequences(W("256423542"), Variant::Left) ==
        std::vector<Word>{W("2"), W("542"), W("632"), W("54")});
  CHECK(minimal_subsequences(W("256423542"), Variant::Right) ==
        std::vector<Word>{W("222"), W("543"), W("654")});
  CHECK(minimal_subsequences(W("e"), Variant::Left).empty());
}

TEST_CASE("minimal subsequences with positions") {
  const auto chains =
      minimal_subsequences_with_positions(W("24131"), Variant::Left);
  REQUIRE(chains.size() == 2);
  CHECK(chains[0].word == W("21"));
  CHECK(chains[0].positions == std::vector<std::size_t>{0, 2});
  CHECK(chains[1].word == W("431"));
  CHECK(chains[1].positions == std::vector<std::size_t>{1, 3, 4});

  CHECK(minimal_subsequences_with_positions(W("e"), Variant::Right).empty());

  const auto single =
      minimal_subsequences_with_positions(W("321"), Variant::Left);
  REQUIRE(single.size() == 1);
  CHECK(single[0].word == W("321"));
  CHECK(single[0].positions == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("minimal subsequences equal the column configuration") {
  for (Variant v : {Variant::Left, Variant::Right}) {
    for (const Word& w : words_up_to(3, 8)) {
      REQUIRE(minimal_subsequences(w, v) == column_configuration(w, v));
    }
  }
}

TEST_CASE("chain positions partition the index set") {
  for (Variant v : {Variant::Left, Variant::Right}) {
    for (const Word& w : words_up_to(3, 6)) {
      std::set<std::size_t> seen;
      std::size_t total = 0;
      for (const auto& chain : minimal_subsequences_with_positions(w, v)) {
        REQUIRE(std::is_sorted(chain.positions.begin(),
                               chain.positions.end()));
        for (std::size_t p : chain.positions) {
          seen.insert(p);
          ++total;
        }
      }
      REQUIRE(total == w.size());
      REQUIRE(seen.size() == w.size());
    }
  }
}

TEST_CASE("standardization preserves the chain positions") {
  for (const Word& w : words_up_to(3, 6)) {
    {
      const auto plain = minimal_subsequences_with_positions(w, Variant::Left);
      const auto std_l =
          minimal_subsequences_with_positions(std_left(w), Variant::Left);
      REQUIRE(plain.size() == std_l.size());
      for (std::size_t i = 0; i < plain.size(); ++i) {
        REQUIRE(plain[i].positions == std_l[i].positions);
      }
    }
    {
      const auto plain = minimal_subsequences_with_positions(w, Variant::Right);
      const auto std_r =
          minimal_subsequences_with_positions(std_right(w), Variant::Right);
      REQUIRE(plain.size() == std_r.size());
      for (std::size_t i = 0; i < plain.size(); ++i) {
        REQUIRE(plain[i].positions == std_r[i].positions);
      }
    }
  }
}

TEST_CASE("prefix lemma: d(c'w) = d(c'c1)") {
  for (Variant v : {Variant::Left, Variant::Right}) {
    const auto columns = psmon::test::column_words_up_to(3, 3, v);
    for (const Word& prefix : columns) {
      for (const Word& w : words_up_to(3, 5)) {
        if (w.empty() || !is_canonical_word(w, v)) {
          continue;
        }
        const Column first = column_configuration(w, v).front();
        Word full = prefix;
        full.insert(full.end(), w.begin(), w.end());
        Word head = prefix;
        head.insert(head.end(), first.begin(), first.end());
        REQUIRE(decreasing_subsequence(full, v).word ==
                decreasing_subsequence(head, v).word);
      }
    }
  }
}
