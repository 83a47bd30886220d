// left_insertion.hpp -- left insertion of a symbol and the left PS algorithm;
// agrees with right insertion on whole words.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "psmon/tableau.hpp"
#include "psmon/words.hpp"

namespace psmon {

// A single left-insertion step either breaks the current column (A), absorbs
// the pending column into it (B1), or passes the pending column through (B2).
enum class InsertionCase { A, B1, B2 };

namespace detail {

// First index s of col whose entry is < pending_min (Left) / <= pending_min
// (Right), or col.size() when no entry qualifies.  The decreasing subsequence
// of pending*col is pending + col[s..], and col[..s) is the next pending
// column.  The bottom entry is probed first so a pass-through column costs a
// single comparison.
template <typename Sym>
std::size_t left_insertion_split(const BasicColumn<Sym>& col,
                                 const Sym& pending_min, Variant v) {
  const bool bottom_qualifies = v == Variant::Left
                                    ? sym_less(col.back(), pending_min)
                                    : sym_leq(col.back(), pending_min);
  if (!bottom_qualifies) {
    return col.size();
  }
  for (std::size_t s = 0; s + 1 < col.size(); ++s) {
    const bool qualifies = v == Variant::Left ? sym_less(col[s], pending_min)
                                              : sym_leq(col[s], pending_min);
    if (qualifies) {
      return s;
    }
  }
  return col.size() - 1;
}

}  // namespace detail

template <typename Sym>
InsertionCase classify_insertion_step(const BasicColumn<Sym>& pending,
                                      const BasicColumn<Sym>& col, Variant v) {
  if (!is_column_word(pending, v) || !is_column_word(col, v)) {
    throw std::invalid_argument("inputs must be valid column words");
  }
  const std::size_t s = detail::left_insertion_split(col, pending.back(), v);
  if (s == 0) {
    return InsertionCase::B1;
  }
  return s == col.size() ? InsertionCase::B2 : InsertionCase::A;
}

template <typename Sym>
void insert_left_inplace(const Sym& a, BasicTableau<Sym>& t) {
  BasicColumn<Sym> pending{a};
  for (auto& col : t.columns) {
    const std::size_t s =
        detail::left_insertion_split(col, pending.back(), t.variant);
    if (s == col.size()) {
      // Case B2: the pending column takes this slot, the column moves on.
      std::swap(pending, col);
      continue;
    }
    BasicColumn<Sym> next(col.begin(), col.begin() + s);
    pending.insert(pending.end(), col.begin() + s, col.end());
    col = std::move(pending);
    pending = std::move(next);
    if (pending.empty()) {
      // Case B1: every later column is untouched.
      return;
    }
  }
  t.columns.push_back(std::move(pending));
}

template <typename Sym>
BasicTableau<Sym> insert_left(const Sym& a, BasicTableau<Sym> t) {
  insert_left_inplace(a, t);
  return t;
}

// Folds insert_left over the symbols of w right to left; equals
// from_word_right(w, v).
template <typename Sym>
BasicTableau<Sym> from_word_left(const BasicWord<Sym>& w, Variant v) {
  BasicTableau<Sym> t;
  t.variant = v;
  for (std::size_t i = w.size(); i-- > 0;) {
    insert_left_inplace(w[i], t);
  }
  return t;
}

}  // namespace psmon
