#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "test_util.hpp"

using namespace psmon;

namespace {

using Ids = std::vector<std::uint32_t>;

// {ab} over {a=0, b=1}
Nfa word_ab() {
  Nfa a;
  a.alphabet_size = 2;
  a.num_states = 3;
  a.add_transition(0, 0, 1);
  a.add_transition(1, 1, 2);
  a.initial = {0};
  a.accepting = {2};
  return a;
}

// {a} over {a=0, b=1}
Nfa word_a() {
  Nfa a;
  a.alphabet_size = 2;
  a.num_states = 2;
  a.add_transition(0, 0, 1);
  a.initial = {0};
  a.accepting = {1};
  return a;
}

std::vector<Ids> all_id_words(std::uint32_t alphabet, std::size_t max_len) {
  std::vector<Ids> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::uint32_t s = 0; s < alphabet; ++s) {
        Ids next = out[i];
        next.push_back(s);
        out.push_back(std::move(next));
      }
    }
    begin = end;
  }
  return out;
}

bool same_language(const Nfa& x, const Nfa& y, std::size_t max_len) {
  for (const Ids& w : all_id_words(x.alphabet_size, max_len)) {
    if (x.accepts(w) != y.accepts(w)) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("nfa acceptance") {
  const Nfa ab = word_ab();
  CHECK(ab.accepts(Ids{0, 1}));
  CHECK_FALSE(ab.accepts(Ids{0}));
  CHECK_FALSE(ab.accepts(Ids{}));
  CHECK_FALSE(ab.accepts(Ids{1, 0}));
}

TEST_CASE("nfa union and concatenation") {
  const Nfa u = nfa_union(word_ab(), word_a());
  CHECK(u.accepts(Ids{0, 1}));
  CHECK(u.accepts(Ids{0}));
  CHECK_FALSE(u.accepts(Ids{1}));

  const Nfa c = nfa_concat(word_a(), word_ab());
  CHECK(c.accepts(Ids{0, 0, 1}));
  CHECK_FALSE(c.accepts(Ids{0, 1}));
}

TEST_CASE("nfa reversal") {
  const Nfa r = nfa_reverse(word_ab());
  CHECK(r.accepts(Ids{1, 0}));
  CHECK_FALSE(r.accepts(Ids{0, 1}));
}

TEST_CASE("epsilon removal, determinization and trimming preserve the language") {
  const Nfa u = nfa_union(word_ab(), nfa_concat(word_a(), word_a()));
  const Nfa no_eps = nfa_remove_epsilon(u);
  for (const auto& t : no_eps.transitions) {
    REQUIRE(t.symbol != Nfa::kEpsilon);
  }
  CHECK(same_language(u, no_eps, 4));
  CHECK(same_language(u, nfa_determinize(u), 4));
  CHECK(same_language(u, nfa_trim(u), 4));
  const Nfa det = nfa_determinize(u);
  CHECK(nfa_trim(det).num_states <= det.num_states);
}

TEST_CASE("product computes the intersection") {
  const Nfa u = nfa_union(word_ab(), word_a());
  const Nfa p = nfa_product(u, word_a());
  CHECK(p.accepts(Ids{0}));
  CHECK_FALSE(p.accepts(Ids{0, 1}));
}

TEST_CASE("dfa stepping matches the nfa") {
  const Nfa u = nfa_union(word_ab(), nfa_concat(word_a(), word_a()));
  const Dfa d = dfa_from(u);
  for (const Ids& w : all_id_words(2, 4)) {
    std::uint32_t state = d.initial;
    bool alive = true;
    for (std::uint32_t s : w) {
      const std::uint32_t next = d.step(state, s);
      if (next == 0) {
        alive = false;
        break;
      }
      state = next - 1;
    }
    REQUIRE((alive && d.accepting[state]) == u.accepts(w));
  }
}
