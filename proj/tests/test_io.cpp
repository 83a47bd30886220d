#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace psmon;
using psmon::test::tab;
using psmon::test::W;

TEST_CASE("column configuration text form") {
  CHECK(format_columns(column_configuration(W("254263542"), Variant::Left)) ==
        "2|542|632|54");
  CHECK(format_columns({}) == "e");
}

TEST_CASE("shape text form") {
  CHECK(format_shape(Shape{1, 3, 3, 2}) == "(1,3,3,2)");
  CHECK(format_shape(Shape{}) == "()");
}

TEST_CASE("ascii tableau rendering") {
  const std::string art =
      tableau_to_ascii(tab(Variant::Left, {"2", "542", "632", "54"}), false);
  CHECK(art ==
        "  5 6  \n"
        "  4 3 5\n"
        "2 2 2 4\n");
  CHECK(tableau_to_ascii(Tableau{}, false) == "(empty tableau)\n");
  const std::string colored =
      tableau_to_ascii(tab(Variant::Left, {"1"}), true);
  CHECK(colored.find("\033[1m") != std::string::npos);
}

TEST_CASE("tableau JSON round-trip") {
  for (Variant v : {Variant::Left, Variant::Right}) {
    for (const Word& w : words_up_to(3, 5)) {
      const Tableau t = from_word_right(w, v);
      REQUIRE(tableau_from_json(tableau_to_json(t)) == t);
    }
  }
  const nlohmann::json j = tableau_to_json(from_word_right(W("21"), Variant::Left));
  CHECK(j["variant"] == "left");
  CHECK_THROWS_AS(
      tableau_from_json(nlohmann::json{{"variant", "left"},
                                       {"columns", {{1, 2}}}}),
      std::invalid_argument);
}

TEST_CASE("growth table formats") {
  const GrowthTable g = growth(MonoidSpec::rps(2), 3);
  const GrowthTable back = growth_from_json(growth_to_json(g));
  REQUIRE(back.entries == g.entries);
  CHECK(growth_to_csv(g) == "max_len,count\n0,1\n1,3\n2,7\n3,14\n");
  CHECK(growth_to_table(g).find("14") != std::string::npos);
}

TEST_CASE("automaton JSON round-trip") {
  const Nfa rep = build_rep_language_rps(2);
  const auto label = [](std::uint32_t s) { return std::to_string(s + 1); };
  const Nfa back = nfa_from_json(nfa_to_json(rep, label));
  REQUIRE(back.num_states == rep.num_states);
  REQUIRE(back.alphabet_size == rep.alphabet_size);
  REQUIRE(back.initial == rep.initial);
  REQUIRE(back.accepting == rep.accepting);
  REQUIRE(back.transitions.size() == rep.transitions.size());
  for (std::size_t i = 0; i < rep.transitions.size(); ++i) {
    REQUIRE(back.transitions[i].from == rep.transitions[i].from);
    REQUIRE(back.transitions[i].symbol == rep.transitions[i].symbol);
    REQUIRE(back.transitions[i].to == rep.transitions[i].to);
  }
}

TEST_CASE("rule export format") {
  std::ostringstream os;
  for (const Rule& r : enumerate_rules_lps(2)) {
    os << r << '\n';
  }
  CHECK(os.str() == "221 -> 212\n");
}

TEST_CASE("DOT export") {
  const Nfa rep = build_rep_language_rps(2);
  const auto label = [](std::uint32_t s) { return std::to_string(s + 1); };
  const std::string dot = nfa_to_dot(rep, label, "rps2_rep");
  CHECK(dot.find("digraph rps2_rep") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);

  const PairAlphabet pa(2);
  const std::string pair_dot =
      nfa_to_dot(build_multiplier_rps(2, 1),
                 [&](std::uint32_t s) { return pa.label(s); });
  CHECK(pair_dot.find("$") != std::string::npos);
}
