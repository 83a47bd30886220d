// tableau.hpp -- PS tableaux, right insertion, column readings and shapes.

#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "psmon/words.hpp"

namespace psmon {

// Left: columns strictly decreasing top-to-bottom, bottom row weakly
// increasing. Right: columns weakly decreasing, bottom row strictly
// increasing.
enum class Variant { Left, Right };

inline const char* variant_name(Variant v) {
  return v == Variant::Left ? "left" : "right";
}

// One column stored top-to-bottom; the bottom entry is back().
template <typename Sym>
using BasicColumn = std::vector<Sym>;

using Column = BasicColumn<Symbol>;

template <typename Sym>
struct BasicTableau {
  Variant variant = Variant::Left;
  std::vector<BasicColumn<Sym>> columns;

  friend bool operator==(const BasicTableau& a, const BasicTableau& b) {
    return a.variant == b.variant && a.columns == b.columns;
  }

  [[nodiscard]] bool empty() const { return columns.empty(); }

  [[nodiscard]] std::size_t box_count() const {
    std::size_t total = 0;
    for (const auto& c : columns) {
      total += c.size();
    }
    return total;
  }
};

using Tableau = BasicTableau<Symbol>;
using StandardizedTableau = BasicTableau<IndexedSymbol>;

using Shape = std::vector<std::size_t>;

namespace detail {

// Derived comparisons, kept on operator< so instrumented symbol types can
// count every probe.
template <typename Sym>
bool sym_less(const Sym& a, const Sym& b) {
  return a < b;
}
template <typename Sym>
bool sym_leq(const Sym& a, const Sym& b) {
  return !(b < a);
}

}  // namespace detail

template <typename Sym>
bool is_column_word(const BasicColumn<Sym>& c, Variant v) {
  if (c.empty()) {
    return false;
  }
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const bool ok = v == Variant::Left ? detail::sym_less(c[i + 1], c[i])
                                       : detail::sym_leq(c[i + 1], c[i]);
    if (!ok) {
      return false;
    }
  }
  return true;
}

template <typename Sym>
bool is_valid_tableau(const BasicTableau<Sym>& t) {
  for (const auto& c : t.columns) {
    if (!is_column_word(c, t.variant)) {
      return false;
    }
  }
  for (std::size_t i = 0; i + 1 < t.columns.size(); ++i) {
    const Sym& a = t.columns[i].back();
    const Sym& b = t.columns[i + 1].back();
    const bool ok = t.variant == Variant::Left ? detail::sym_leq(a, b)
                                               : detail::sym_less(a, b);
    if (!ok) {
      return false;
    }
  }
  return true;
}

// Index of the column that receives a, or columns.size() when a starts a new
// column.  Binary search over the bottom row; one comparison per probe.
template <typename Sym>
std::size_t insertion_column(const BasicTableau<Sym>& t, const Sym& a) {
  std::size_t lo = 0;
  std::size_t hi = t.columns.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const Sym& bottom = t.columns[mid].back();
    // Left: first column with bottom > a.  Right: first with bottom >= a.
    const bool past = t.variant == Variant::Left ? detail::sym_less(a, bottom)
                                                 : detail::sym_leq(a, bottom);
    if (past) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

template <typename Sym>
void insert_right_inplace(BasicTableau<Sym>& t, const Sym& a) {
  const std::size_t idx = insertion_column(t, a);
  if (idx == t.columns.size()) {
    t.columns.push_back({a});
  } else {
    t.columns[idx].push_back(a);
  }
}

template <typename Sym>
BasicTableau<Sym> insert_right(BasicTableau<Sym> t, const Sym& a) {
  insert_right_inplace(t, a);
  return t;
}

template <typename Sym>
BasicTableau<Sym> from_word_right(const BasicWord<Sym>& w, Variant v) {
  BasicTableau<Sym> t;
  t.variant = v;
  for (const Sym& a : w) {
    insert_right_inplace(t, a);
  }
  return t;
}

template <typename Sym>
BasicWord<Sym> column_reading(const BasicTableau<Sym>& t) {
  BasicWord<Sym> out;
  out.reserve(t.box_count());
  for (const auto& c : t.columns) {
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

template <typename Sym>
Shape shape(const BasicTableau<Sym>& t) {
  Shape heights;
  heights.reserve(t.columns.size());
  for (const auto& c : t.columns) {
    heights.push_back(c.size());
  }
  return heights;
}

template <typename Sym>
bool is_canonical_word(const BasicWord<Sym>& w, Variant v) {
  return column_reading(from_word_right(w, v)) == w;
}

template <typename Sym>
std::vector<BasicColumn<Sym>> column_configuration(const BasicWord<Sym>& w,
                                                   Variant v) {
  return from_word_right(w, v).columns;
}

// Left: entries are indexed reading columns left-to-right, each top-to-bottom.
// Right: columns right-to-left, each bottom-to-top.
inline StandardizedTableau standardize_tableau(const Tableau& t) {
  StandardizedTableau out;
  out.variant = t.variant;
  out.columns.resize(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out.columns[i].resize(t.columns[i].size());
  }
  std::map<Symbol, std::uint32_t> seen;
  if (t.variant == Variant::Left) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      for (std::size_t j = 0; j < t.columns[i].size(); ++j) {
        const Symbol a = t.columns[i][j];
        out.columns[i][j] = IndexedSymbol{a, ++seen[a]};
      }
    }
  } else {
    for (std::size_t i = t.columns.size(); i-- > 0;) {
      for (std::size_t j = t.columns[i].size(); j-- > 0;) {
        const Symbol a = t.columns[i][j];
        out.columns[i][j] = IndexedSymbol{a, ++seen[a]};
      }
    }
  }
  return out;
}

// Erases the indexes; rejects input whose erased form is not a valid tableau.
inline Tableau destandardize_tableau(const StandardizedTableau& t) {
  Tableau out;
  out.variant = t.variant;
  out.columns.reserve(t.columns.size());
  for (const auto& c : t.columns) {
    Column erased;
    erased.reserve(c.size());
    for (IndexedSymbol s : c) {
      erased.push_back(s.underlying);
    }
    out.columns.push_back(std::move(erased));
  }
  if (!is_valid_tableau(out)) {
    throw std::invalid_argument(
        "de-standardization does not yield a valid tableau");
  }
  return out;
}

template <typename Sym>
std::ostream& operator<<(std::ostream& os, const BasicTableau<Sym>& t) {
  os << variant_name(t.variant) << '[';
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i > 0) {
      os << '|';
    }
    for (std::size_t j = 0; j < t.columns[i].size(); ++j) {
      if (j > 0) {
        os << ' ';
      }
      os << t.columns[i][j];
    }
  }
  return os << ']';
}

}  // namespace psmon
