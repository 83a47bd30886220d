// presentation.hpp -- relation schemas, shortlex-decreasing rewriting to
// canonical normal forms, and the bounded local-confluence check.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "psmon/tableau.hpp"
#include "psmon/words.hpp"

namespace psmon {

struct Rule {
  Word lhs;
  Word rhs;

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Rule& r) {
  return os << format_word(r.lhs) << " -> " << format_word(r.rhs);
}

// Matches factors y u_m ... u_1 x with x < y <= u_1 < ... < u_m (Left) or
// x <= y < u_1 <= ... <= u_m (Right); rank bounds the alphabet when set.
struct RuleSchema {
  Variant variant = Variant::Left;
  std::optional<Symbol> rank;  // nullopt = unbounded alphabet
};

struct RewriteStep {
  std::size_t pos = 0;
  Rule rule;
  Word result;  // whole word after the step
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
};

// All rules over A_rank; finite for the Left schema.  Sorted by shortlex of
// the left-hand side for stable export.
inline std::vector<Rule> enumerate_rules_lps(Symbol rank) {
  std::vector<Rule> rules;
  // u ranges over the non-empty strictly increasing sequences y <= u_1 < ...
  // < u_m inside A_rank, encoded as subsets of {y..rank}.
  for (Symbol y = 2; y <= rank; ++y) {
    const Symbol span = rank - y + 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << span); ++mask) {
      Word u_desc;  // u_m ... u_1 as written in the word
      for (Symbol off = span; off-- > 0;) {
        if (mask & (std::uint64_t{1} << off)) {
          u_desc.push_back(y + off);
        }
      }
      for (Symbol x = 1; x < y; ++x) {
        Rule r;
        r.lhs.push_back(y);
        r.lhs.insert(r.lhs.end(), u_desc.begin(), u_desc.end());
        r.lhs.push_back(x);
        r.rhs.push_back(y);
        r.rhs.push_back(x);
        r.rhs.insert(r.rhs.end(), u_desc.begin(), u_desc.end());
        rules.push_back(std::move(r));
      }
    }
  }
  std::sort(rules.begin(), rules.end(), [](const Rule& a, const Rule& b) {
    return shortlex_less(a.lhs, b.lhs);
  });
  return rules;
}

// The unique schema instance whose left-hand side is a factor of w starting
// at i, if any.  The u-run is forced: it extends to the first later symbol
// that qualifies as x, and no x-candidate can occur inside u.
inline std::optional<Rule> match_schema_at(const Word& w, std::size_t i,
                                           const RuleSchema& s) {
  if (i >= w.size()) {
    throw std::invalid_argument("position out of range");
  }
  const Symbol y = w[i];
  if (s.rank && y > *s.rank) {
    return std::nullopt;
  }
  const bool left = s.variant == Variant::Left;
  std::size_t j = i + 1;
  while (j < w.size()) {
    const bool is_x = left ? w[j] < y : w[j] <= y;
    if (is_x) {
      break;
    }
    if (s.rank && w[j] > *s.rank) {
      return std::nullopt;
    }
    ++j;
  }
  if (j >= w.size() || j < i + 2) {
    return std::nullopt;  // no x, or an empty u-run
  }
  // The run w[i+1..j-1] must read as u_m ... u_1, i.e. decrease left to
  // right (strictly for Left, weakly for Right).  u_1 >= y (Left) resp.
  // u_1 > y (Right) already holds: w[j-1] was not an x-candidate.
  for (std::size_t k = i + 1; k + 1 < j; ++k) {
    const bool decreasing = left ? w[k + 1] < w[k] : w[k + 1] <= w[k];
    if (!decreasing) {
      return std::nullopt;
    }
  }
  Rule r;
  r.lhs.assign(w.begin() + static_cast<std::ptrdiff_t>(i),
               w.begin() + static_cast<std::ptrdiff_t>(j + 1));
  r.rhs.push_back(y);
  r.rhs.push_back(w[j]);
  r.rhs.insert(r.rhs.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 1),
               w.begin() + static_cast<std::ptrdiff_t>(j));
  return r;
}

inline bool is_irreducible(const Word& w, Variant v) {
  const RuleSchema schema{v, std::nullopt};
  for (std::size_t i = 0; i + 3 <= w.size(); ++i) {
    if (match_schema_at(w, i, schema)) {
      return false;
    }
  }
  return true;
}

// Applies the leftmost schema match until irreducible.  Completeness of the
// systems makes the result the canonical word of w's class.
inline std::pair<Word, RewriteTrace> normal_form(const Word& w, Variant v) {
  const RuleSchema schema{v, std::nullopt};
  Word current = w;
  RewriteTrace trace;
  while (true) {
    bool rewritten = false;
    for (std::size_t i = 0; i + 3 <= current.size() && !rewritten; ++i) {
      auto match = match_schema_at(current, i, schema);
      if (!match) {
        continue;
      }
      Word next(current.begin(),
                current.begin() + static_cast<std::ptrdiff_t>(i));
      next.insert(next.end(), match->rhs.begin(), match->rhs.end());
      next.insert(next.end(),
                  current.begin() +
                      static_cast<std::ptrdiff_t>(i + match->lhs.size()),
                  current.end());
      current = std::move(next);
      trace.steps.push_back(RewriteStep{i, *match, current});
      rewritten = true;
    }
    if (!rewritten) {
      break;
    }
  }
  return {current, trace};
}

struct ConfluenceViolation {
  Word word;
  std::size_t pos_a = 0;
  std::size_t pos_b = 0;
  Word nf_a;
  Word nf_b;
};

struct ConfluenceReport {
  std::size_t words_checked = 0;
  std::size_t branching_words = 0;
  std::vector<ConfluenceViolation> violations;
};

// Exhaustively checks that every pair of single-step reductions of every word
// over A_rank of length <= max_len rejoins at a common normal form.
inline ConfluenceReport check_local_confluence(Variant v, Symbol rank,
                                               std::size_t max_len) {
  const RuleSchema schema{v, rank};
  ConfluenceReport report;
  for (const Word& w : words_up_to(rank, max_len)) {
    ++report.words_checked;
    std::vector<std::pair<std::size_t, Word>> reducts;
    for (std::size_t i = 0; i + 3 <= w.size(); ++i) {
      auto match = match_schema_at(w, i, schema);
      if (!match) {
        continue;
      }
      Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      u.insert(u.end(), match->rhs.begin(), match->rhs.end());
      u.insert(u.end(),
               w.begin() + static_cast<std::ptrdiff_t>(i + match->lhs.size()),
               w.end());
      reducts.emplace_back(i, std::move(u));
    }
    if (reducts.size() < 2) {
      continue;
    }
    ++report.branching_words;
    const Word nf0 = normal_form(reducts[0].second, v).first;
    for (std::size_t k = 1; k < reducts.size(); ++k) {
      const Word nfk = normal_form(reducts[k].second, v).first;
      if (nfk != nf0) {
        report.violations.push_back(ConfluenceViolation{
            w, reducts[0].first, reducts[k].first, nf0, nfk});
      }
    }
  }
  return report;
}

// The pair (1 2^i 1, 1 1 2^i); its two sides have equal rPS tableaux for
// every i, which is what defeats any finite presentation of rps_n, n >= 2.
inline std::pair<Word, Word> non_fp_witness(std::size_t i) {
  if (i < 1) {
    throw std::invalid_argument("witness index must be >= 1");
  }
  Word lhs{1};
  lhs.insert(lhs.end(), i, 2);
  lhs.push_back(1);
  Word rhs{1, 1};
  rhs.insert(rhs.end(), i, 2);
  if (from_word_right(lhs, Variant::Right) !=
      from_word_right(rhs, Variant::Right)) {
    throw std::logic_error("non-fp witness pair is not rps-equivalent");
  }
  return {lhs, rhs};
}

}  // namespace psmon
