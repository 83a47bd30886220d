// monoid.hpp -- monoid-level API: the word problem, multiplication of
// canonical forms, growth enumeration, identity checking and searching.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "psmon/tableau.hpp"
#include "psmon/words.hpp"

namespace psmon {

struct MonoidSpec {
  Variant variant = Variant::Left;
  std::optional<Symbol> rank;  // nullopt = unbounded rank

  static MonoidSpec lps(Symbol n) { return {Variant::Left, n}; }
  static MonoidSpec rps(Symbol n) { return {Variant::Right, n}; }
  static MonoidSpec lps_unbounded() { return {Variant::Left, std::nullopt}; }
  static MonoidSpec rps_unbounded() { return {Variant::Right, std::nullopt}; }
};

inline void validate_word(const Word& w, const MonoidSpec& m) {
  if (m.rank) {
    validate_word(w, *m.rank);
  }
}

inline Symbol required_rank(const MonoidSpec& m, const char* what) {
  if (!m.rank) {
    throw std::invalid_argument(std::string(what) +
                                " requires a bounded rank");
  }
  if (*m.rank < 1) {
    throw std::invalid_argument("rank must be >= 1");
  }
  return *m.rank;
}

inline Word canonical_word(const Word& w, Variant v) {
  return column_reading(from_word_right(w, v));
}

inline bool equiv(const Word& u, const Word& v, const MonoidSpec& m) {
  validate_word(u, m);
  validate_word(v, m);
  return from_word_right(u, m.variant) == from_word_right(v, m.variant);
}

// Quotient multiplication realized on canonical representatives.
inline Word multiply(const Word& u, const Word& v, const MonoidSpec& m) {
  validate_word(u, m);
  validate_word(v, m);
  if (!is_canonical_word(u, m.variant) || !is_canonical_word(v, m.variant)) {
    throw std::invalid_argument("multiply expects canonical words");
  }
  Word product = u;
  product.insert(product.end(), v.begin(), v.end());
  return canonical_word(product, m.variant);
}

namespace detail {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Symbol a : w) {
      h ^= a;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

struct GrowthTable {
  // (length bound N, number of distinct elements of length <= N)
  std::vector<std::pair<std::size_t, std::size_t>> entries;
};

// Breadth-first generation over right multiplication by generators, with
// canonical words as the element keys.
inline GrowthTable growth(const MonoidSpec& m, std::size_t max_len) {
  const Symbol n = required_rank(m, "growth");
  GrowthTable table;
  std::unordered_set<Word, detail::WordHash> seen;
  std::vector<Word> frontier{Word{}};
  seen.insert(Word{});
  table.entries.emplace_back(0, 1);
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& u : frontier) {
      Tableau t = from_word_right(u, m.variant);
      for (Symbol a = 1; a <= n; ++a) {
        Word key = column_reading(insert_right(t, a));
        if (seen.insert(key).second) {
          next.push_back(std::move(key));
        }
      }
    }
    table.entries.emplace_back(len, seen.size());
    frontier = std::move(next);
  }
  return table;
}

// A formal equality between words over the variables {x, y, z, w}.
struct IdentityTerm {
  std::string lhs;
  std::string rhs;

  IdentityTerm(std::string l, std::string r)
      : lhs(std::move(l)), rhs(std::move(r)) {
    if (lhs.empty() || rhs.empty()) {
      throw std::invalid_argument("identity sides must be non-empty");
    }
    for (char c : lhs + rhs) {
      if (c != 'x' && c != 'y' && c != 'z' && c != 'w') {
        throw std::invalid_argument(
            "identity variables must be single letters from {x, y, z, w}");
      }
    }
  }

  [[nodiscard]] std::vector<char> variables() const {
    std::vector<char> vars;
    for (char c : lhs + rhs) {
      if (std::find(vars.begin(), vars.end(), c) == vars.end()) {
        vars.push_back(c);
      }
    }
    std::sort(vars.begin(), vars.end());
    return vars;
  }
};

struct IdentityCounterexample {
  std::vector<std::pair<char, Word>> assignment;
  Word lhs_value;
  Word rhs_value;
};

namespace detail {

inline Word substitute(const std::string& side,
                       const std::map<char, Word>& assignment) {
  Word out;
  for (char c : side) {
    const Word& w = assignment.at(c);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

}  // namespace detail

// Substitutes every tuple of words of length <= max_sub_len (including the
// empty word) for the variables, in shortlex order over tuples, and returns
// the first substitution separating the two sides.
inline std::optional<IdentityCounterexample> check_identity(
    const IdentityTerm& id, const MonoidSpec& m, std::size_t max_sub_len) {
  const Symbol n = required_rank(m, "identity checking");
  const std::vector<char> vars = id.variables();
  const std::vector<Word> pool = words_up_to(n, max_sub_len);
  std::vector<std::size_t> odometer(vars.size(), 0);
  while (true) {
    std::map<char, Word> assignment;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      assignment[vars[k]] = pool[odometer[k]];
    }
    Word lhs_value = detail::substitute(id.lhs, assignment);
    Word rhs_value = detail::substitute(id.rhs, assignment);
    if (from_word_right(lhs_value, m.variant) !=
        from_word_right(rhs_value, m.variant)) {
      IdentityCounterexample ce;
      for (char c : vars) {
        ce.assignment.emplace_back(c, assignment[c]);
      }
      ce.lhs_value = std::move(lhs_value);
      ce.rhs_value = std::move(rhs_value);
      return ce;
    }
    // Advance the odometer; the last variable varies fastest.
    std::size_t k = vars.size();
    while (k-- > 0) {
      if (++odometer[k] < pool.size()) {
        break;
      }
      odometer[k] = 0;
      if (k == 0) {
        return std::nullopt;
      }
    }
  }
}

struct MinimalIdentityWitness {
  std::size_t position = 0;  // 1-based differing position j
  char s_variable = 0;       // lhs variable at j, substituted by s
  char t_variable = 0;       // rhs variable at j, substituted by t
  Word s;                    // n (n-1) ... 2 1
  Word t;                    // s with the symbol j deleted
  Word lhs_value;
  Word rhs_value;
  std::size_t lhs_bottom_row = 0;
  std::size_t rhs_bottom_row = 0;
};

// Refutation by substitution: s = n(n-1)...1 and t = s with
// symbol j removed separates any non-trivial two-variable identity of length
// <= n in rps_n, witnessed by differing bottom-row lengths.
inline MinimalIdentityWitness minimal_identity_witness(Symbol rank,
                                                       const IdentityTerm& id) {
  if (rank < 1) {
    throw std::invalid_argument("rank must be >= 1");
  }
  if (id.lhs == id.rhs) {
    throw std::invalid_argument("identity is trivial");
  }
  if (id.lhs.size() != id.rhs.size()) {
    throw std::invalid_argument("identity sides must have equal length");
  }
  if (id.lhs.size() > rank) {
    throw std::invalid_argument("identity length must be <= rank");
  }
  if (id.variables().size() != 2) {
    throw std::invalid_argument("witness construction needs two variables");
  }
  std::size_t j = 0;
  while (j < id.lhs.size() && id.lhs[j] == id.rhs[j]) {
    ++j;
  }
  MinimalIdentityWitness w;
  w.position = j + 1;
  w.s_variable = id.lhs[j];
  w.t_variable = id.rhs[j];
  for (Symbol a = rank; a >= 1; --a) {
    w.s.push_back(a);
    if (a != static_cast<Symbol>(w.position)) {
      w.t.push_back(a);
    }
  }
  std::map<char, Word> assignment{{w.s_variable, w.s}, {w.t_variable, w.t}};
  w.lhs_value = detail::substitute(id.lhs, assignment);
  w.rhs_value = detail::substitute(id.rhs, assignment);
  w.lhs_bottom_row = from_word_right(w.lhs_value, Variant::Right).columns.size();
  w.rhs_bottom_row = from_word_right(w.rhs_value, Variant::Right).columns.size();
  if (w.lhs_bottom_row == w.rhs_bottom_row) {
    throw std::logic_error("witness substitution failed to separate the sides");
  }
  return w;
}

struct FreeEmbeddingReport {
  std::vector<Word> generators;  // C_n, the decreasing column words ending in 1
  std::size_t products_checked = 0;
  bool all_distinct = true;
  bool columns_are_factors = true;
};

// Verifies that products of <= max_factors elements of C_n have pairwise
// distinct lPS tableaux whose i-th column is the i-th factor.
inline FreeEmbeddingReport free_embedding_check(Symbol rank,
                                                std::size_t max_factors) {
  if (rank < 2) {
    throw std::invalid_argument("free embedding needs rank >= 2");
  }
  FreeEmbeddingReport report;
  const Symbol span = rank - 1;  // choices among {2..rank}
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << span); ++mask) {
    Word g;
    for (Symbol off = span; off-- > 0;) {
      if (mask & (std::uint64_t{1} << off)) {
        g.push_back(2 + off);
      }
    }
    g.push_back(1);
    report.generators.push_back(std::move(g));
  }
  std::sort(report.generators.begin(), report.generators.end(),
            shortlex_less<Symbol>);
  std::unordered_set<Word, detail::WordHash> seen;
  const std::size_t g = report.generators.size();
  const auto advance = [g](std::vector<std::size_t>& tuple) {
    std::size_t pos = tuple.size();
    while (pos-- > 0) {
      if (++tuple[pos] < g) {
        return true;
      }
      tuple[pos] = 0;
    }
    return false;
  };
  for (std::size_t k = 1; k <= max_factors; ++k) {
    std::vector<std::size_t> tuple(k, 0);
    do {
      Word product;
      for (std::size_t idx : tuple) {
        const Word& f = report.generators[idx];
        product.insert(product.end(), f.begin(), f.end());
      }
      const Tableau t = from_word_right(product, Variant::Left);
      ++report.products_checked;
      if (t.columns.size() != k) {
        report.columns_are_factors = false;
      } else {
        for (std::size_t i = 0; i < k; ++i) {
          if (t.columns[i] != report.generators[tuple[i]]) {
            report.columns_are_factors = false;
          }
        }
      }
      if (!seen.insert(column_reading(t)).second) {
        report.all_distinct = false;
      }
    } while (advance(tuple));
  }
  return report;
}

}  // namespace psmon
