// demo_insertion.cpp -- build the two tableaux of a word and print them.

#include <iostream>

#include "psmon/psmon.hpp"

int main() {
  using namespace psmon;
  const Word w = parse_word("254263542");
  for (Variant v : {Variant::Left, Variant::Right}) {
    const Tableau t = from_word_right(w, v);
    std::cout << variant_name(v) << " tableau of " << format_word(w) << ":\n"
              << tableau_to_ascii(t)
              << "columns: " << format_columns(t.columns) << "\n\n";
  }
  return 0;
}
