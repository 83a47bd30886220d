// instrumentation.hpp -- a counting symbol type; the insertion and
// subsequence algorithms are templates over the symbol, so routing them
// through CountingSymbol measures their comparison counts.

#pragma once

#include <cstdint>
#include <ostream>

#include "psmon/words.hpp"

namespace psmon {

struct CountingSymbol {
  Symbol value = 0;

  // Shared tally; the bench harness is single-threaded.
  static inline std::uint64_t comparisons = 0;

  static void reset() { comparisons = 0; }

  friend bool operator<(CountingSymbol a, CountingSymbol b) {
    ++comparisons;
    return a.value < b.value;
  }
  friend bool operator==(CountingSymbol a, CountingSymbol b) {
    return a.value == b.value;
  }
};

inline std::ostream& operator<<(std::ostream& os, CountingSymbol s) {
  return os << s.value;
}

inline BasicWord<CountingSymbol> counted_word(const Word& w) {
  BasicWord<CountingSymbol> out;
  out.reserve(w.size());
  for (Symbol a : w) {
    out.push_back(CountingSymbol{a});
  }
  return out;
}

}  // namespace psmon
