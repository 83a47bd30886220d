// words.hpp -- ranked alphabet, words, evaluation, standardization, shortlex order.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace psmon {

// Alphabet symbols are 1-based positive integers. The value 0 is reserved for
// sentinel uses (padding and epsilon markers in the automata layer).
using Symbol = std::uint32_t;

template <typename Sym>
using BasicWord = std::vector<Sym>;

using Word = BasicWord<Symbol>;

// Multiplicity map of a word; absent symbols have count zero.
using Evaluation = std::map<Symbol, std::size_t>;

// A symbol carrying its occurrence index (1-based), ordered lexicographically
// by (underlying, index).
struct IndexedSymbol {
  Symbol underlying = 0;
  std::uint32_t index = 0;

  friend constexpr bool operator==(IndexedSymbol a, IndexedSymbol b) {
    return a.underlying == b.underlying && a.index == b.index;
  }
  friend constexpr bool operator<(IndexedSymbol a, IndexedSymbol b) {
    return a.underlying < b.underlying ||
           (a.underlying == b.underlying && a.index < b.index);
  }
};

using StandardizedWord = BasicWord<IndexedSymbol>;

inline std::ostream& operator<<(std::ostream& os, IndexedSymbol s) {
  return os << s.underlying << '_' << s.index;
}

inline Evaluation evaluation(const Word& w) {
  Evaluation counts;
  for (Symbol a : w) {
    ++counts[a];
  }
  return counts;
}

// Occurrences of each symbol are indexed 1,2,... in left-to-right order.
inline StandardizedWord std_left(const Word& w) {
  StandardizedWord out;
  out.reserve(w.size());
  std::map<Symbol, std::uint32_t> seen;
  for (Symbol a : w) {
    out.push_back(IndexedSymbol{a, ++seen[a]});
  }
  return out;
}

// Occurrences of each symbol are indexed 1,2,... in right-to-left order.
inline StandardizedWord std_right(const Word& w) {
  StandardizedWord out(w.size());
  std::map<Symbol, std::uint32_t> seen;
  for (std::size_t i = w.size(); i-- > 0;) {
    out[i] = IndexedSymbol{w[i], ++seen[w[i]]};
  }
  return out;
}

inline Word destandardize(const StandardizedWord& s) {
  Word out;
  out.reserve(s.size());
  for (IndexedSymbol a : s) {
    out.push_back(a.underlying);
  }
  return out;
}

// Length-plus-lexicographic (shortlex) order; a strict total order on words.
template <typename Sym>
bool shortlex_less(const BasicWord<Sym>& u, const BasicWord<Sym>& v) {
  if (u.size() != v.size()) {
    return u.size() < v.size();
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < v[i]) {
      return true;
    }
    if (v[i] < u[i]) {
      return false;
    }
  }
  return false;
}

inline void validate_symbol(Symbol a, Symbol rank) {
  if (a < 1) {
    throw std::invalid_argument("symbols are 1-based positive integers");
  }
  if (a > rank) {
    throw std::invalid_argument("symbol " + std::to_string(a) +
                                " exceeds rank " + std::to_string(rank));
  }
}

inline void validate_word(const Word& w, Symbol rank) {
  for (Symbol a : w) {
    validate_symbol(a, rank);
  }
}

// All words over A_rank of length <= max_len, listed in shortlex order.
inline std::vector<Word> words_up_to(Symbol rank, std::size_t max_len) {
  std::vector<Word> out;
  out.push_back({});
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Symbol a = 1; a <= rank; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

// Wire format: contiguous decimal digits when all symbols fit in one digit
// ("254263542"), comma-separated decimal integers otherwise ("10,2,11").
// The empty word is written "e".
inline Word parse_word(std::string_view text) {
  Word out;
  if (text.empty() || text == "e") {
    return out;
  }
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t next = text.find(',', pos);
      const std::string_view piece =
          text.substr(pos, next == std::string_view::npos ? next : next - pos);
      if (piece.empty()) {
        throw std::invalid_argument("empty symbol in word: '" +
                                    std::string(text) + "'");
      }
      Symbol value = 0;
      for (char c : piece) {
        if (c < '0' || c > '9') {
          throw std::invalid_argument("invalid symbol '" + std::string(piece) +
                                      "' in word");
        }
        value = value * 10 + static_cast<Symbol>(c - '0');
      }
      if (value == 0) {
        throw std::invalid_argument("symbols are 1-based positive integers");
      }
      out.push_back(value);
      if (next == std::string_view::npos) {
        break;
      }
      pos = next + 1;
    }
    return out;
  }
  out.reserve(text.size());
  for (char c : text) {
    if (c < '1' || c > '9') {
      throw std::invalid_argument("invalid character '" + std::string(1, c) +
                                  "' in word '" + std::string(text) + "'");
    }
    out.push_back(static_cast<Symbol>(c - '0'));
  }
  return out;
}

inline std::string format_word(const Word& w) {
  if (w.empty()) {
    return "e";
  }
  bool single_digit = true;
  for (Symbol a : w) {
    if (a > 9) {
      single_digit = false;
      break;
    }
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_digit && i > 0) {
      out += ',';
    }
    out += std::to_string(w[i]);
  }
  return out;
}

// Rendered as "a_i" pairs joined by spaces, e.g. "1_1 3_1 2_1 1_2 2_2 2_3 1_3".
inline std::string format_standardized(const StandardizedWord& s) {
  if (s.empty()) {
    return "e";
  }
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += std::to_string(s[i].underlying) + "_" + std::to_string(s[i].index);
  }
  return out;
}

}  // namespace psmon
