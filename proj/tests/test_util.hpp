// test_util.hpp -- shared helpers for the unit tests.

#pragma once

#include <string>
#include <vector>

#include "psmon/psmon.hpp"

namespace psmon::test {

inline Word W(const std::string& text) { return parse_word(text); }

inline Tableau tab(Variant v, const std::vector<std::string>& columns) {
  Tableau t;
  t.variant = v;
  for (const auto& c : columns) {
    t.columns.push_back(parse_word(c));
  }
  return t;
}

inline std::vector<Column> cols(const std::vector<std::string>& columns) {
  std::vector<Column> out;
  for (const auto& c : columns) {
    out.push_back(parse_word(c));
  }
  return out;
}

// Strictly (Left) or weakly (Right) decreasing non-empty words over A_rank of
// length <= max_len: all column words.
inline std::vector<Word> column_words_up_to(Symbol rank, std::size_t max_len,
                                            Variant v) {
  std::vector<Word> out;
  for (const Word& w : words_up_to(rank, max_len)) {
    if (!w.empty() && is_column_word(w, v)) {
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace psmon::test
