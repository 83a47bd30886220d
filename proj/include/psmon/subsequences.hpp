// subsequences.hpp -- decreasing subsequences and left-to-right minimal
// subsequences; an alternative route to the column configuration.

#pragma once

#include <cstddef>
#include <vector>

#include "psmon/tableau.hpp"
#include "psmon/words.hpp"

namespace psmon {

template <typename Sym>
struct Chain {
  BasicWord<Sym> word;
  std::vector<std::size_t> positions;  // strictly increasing, 0-based

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.word == b.word && a.positions == b.positions;
  }
};

namespace detail {

// Greedy chain over the unmarked positions, starting at the first one.
// Left: each next element is the first symbol strictly less than the previous;
// Right: less than or equal.
template <typename Sym>
Chain<Sym> extract_chain(const BasicWord<Sym>& w, std::vector<char>& taken,
                         std::size_t start, Variant v) {
  Chain<Sym> chain;
  std::size_t prev = start;
  chain.word.push_back(w[start]);
  chain.positions.push_back(start);
  taken[start] = 1;
  for (std::size_t i = start + 1; i < w.size(); ++i) {
    if (taken[i]) {
      continue;
    }
    const bool smaller = v == Variant::Left ? sym_less(w[i], w[prev])
                                            : sym_leq(w[i], w[prev]);
    if (smaller) {
      chain.word.push_back(w[i]);
      chain.positions.push_back(i);
      taken[i] = 1;
      prev = i;
    }
  }
  return chain;
}

}  // namespace detail

template <typename Sym>
Chain<Sym> decreasing_subsequence(const BasicWord<Sym>& w, Variant v) {
  if (w.empty()) {
    return {};
  }
  std::vector<char> taken(w.size(), 0);
  return detail::extract_chain(w, taken, 0, v);
}

// The non-empty subsequences extracted by iterating decreasing_subsequence
// with previously taken positions deleted.  The position sets partition the
// index set of w.
template <typename Sym>
std::vector<Chain<Sym>> minimal_subsequences_with_positions(
    const BasicWord<Sym>& w, Variant v) {
  std::vector<Chain<Sym>> chains;
  std::vector<char> taken(w.size(), 0);
  std::size_t start = 0;
  while (true) {
    while (start < w.size() && taken[start]) {
      ++start;
    }
    if (start == w.size()) {
      break;
    }
    chains.push_back(detail::extract_chain(w, taken, start, v));
  }
  return chains;
}

template <typename Sym>
std::vector<BasicWord<Sym>> minimal_subsequences(const BasicWord<Sym>& w,
                                                 Variant v) {
  std::vector<BasicWord<Sym>> out;
  for (auto& chain : minimal_subsequences_with_positions(w, v)) {
    out.push_back(std::move(chain.word));
  }
  return out;
}

}  // namespace psmon
