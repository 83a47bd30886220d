// demo_word_problem.cpp -- decide a few equivalences three different ways.

#include <iostream>

#include "psmon/psmon.hpp"

int main() {
  using namespace psmon;
  const MonoidSpec rps2 = MonoidSpec::rps(2);
  const AutomaticStructure structure(rps2);
  const std::pair<Word, Word> pairs[] = {
      {parse_word("121"), parse_word("112")},
      {parse_word("2121"), parse_word("2211")},
      {parse_word("21"), parse_word("12")},
  };
  for (const auto& [u, v] : pairs) {
    std::cout << format_word(u) << " ~ " << format_word(v)
              << "  tableau: " << equiv(u, v, rps2)
              << "  rewriting: "
              << (normal_form(u, Variant::Right).first ==
                  normal_form(v, Variant::Right).first)
              << "  automaton: " << structure.equivalent(u, v) << '\n';
  }
  return 0;
}
