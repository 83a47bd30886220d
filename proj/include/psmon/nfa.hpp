// nfa.hpp -- small epsilon-NFA kernel shared by the automatic-structure
// builders: union, concatenation, reversal, product, determinization.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace psmon {

// Symbols are dense ids 0..alphabet_size-1; kEpsilon marks epsilon moves.
struct Nfa {
  static constexpr std::int32_t kEpsilon = -1;

  struct Transition {
    std::uint32_t from = 0;
    std::int32_t symbol = kEpsilon;
    std::uint32_t to = 0;
  };

  std::uint32_t num_states = 0;
  std::uint32_t alphabet_size = 0;
  std::vector<Transition> transitions;
  std::vector<std::uint32_t> initial;
  std::vector<std::uint32_t> accepting;

  std::uint32_t add_state() { return num_states++; }

  void add_transition(std::uint32_t from, std::int32_t symbol,
                      std::uint32_t to) {
    transitions.push_back(Transition{from, symbol, to});
  }

  void add_epsilon(std::uint32_t from, std::uint32_t to) {
    add_transition(from, kEpsilon, to);
  }

  bool accepts(std::span<const std::uint32_t> word) const;
};

// Bitset-backed state sets for the stepping engine.
using StateSet = std::vector<std::uint64_t>;

namespace detail {

inline void set_bit(StateSet& s, std::uint32_t i) {
  s[i >> 6] |= std::uint64_t{1} << (i & 63);
}
inline bool test_bit(const StateSet& s, std::uint32_t i) {
  return (s[i >> 6] >> (i & 63)) & 1;
}
inline bool any_common(const StateSet& a, const StateSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) {
      return true;
    }
  }
  return false;
}
inline bool is_empty(const StateSet& s) {
  for (std::uint64_t word : s) {
    if (word) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

// Immutable stepping form of an Nfa: per-symbol adjacency plus precomputed
// epsilon closures.  step() applies the trailing epsilon closure itself.
class CompiledNfa {
 public:
  explicit CompiledNfa(const Nfa& nfa)
      : num_states_(nfa.num_states),
        alphabet_size_(nfa.alphabet_size),
        words_((std::size_t{nfa.num_states} + 63) / 64),
        closure_(nfa.num_states, StateSet(words_, 0)),
        accepting_(words_, 0) {
    std::vector<std::vector<std::uint32_t>> eps(nfa.num_states);
    adj_.assign(std::size_t{nfa.alphabet_size} * nfa.num_states, {});
    for (const auto& t : nfa.transitions) {
      if (t.symbol == Nfa::kEpsilon) {
        eps[t.from].push_back(t.to);
      } else {
        adj_[static_cast<std::size_t>(t.symbol) * num_states_ + t.from]
            .push_back(t.to);
      }
    }
    for (std::uint32_t q = 0; q < num_states_; ++q) {
      std::vector<std::uint32_t> stack{q};
      detail::set_bit(closure_[q], q);
      while (!stack.empty()) {
        const std::uint32_t s = stack.back();
        stack.pop_back();
        for (std::uint32_t t : eps[s]) {
          if (!detail::test_bit(closure_[q], t)) {
            detail::set_bit(closure_[q], t);
            stack.push_back(t);
          }
        }
      }
    }
    initial_.assign(words_, 0);
    for (std::uint32_t q : nfa.initial) {
      merge(initial_, closure_[q]);
    }
    for (std::uint32_t q : nfa.accepting) {
      detail::set_bit(accepting_, q);
    }
  }

  [[nodiscard]] const StateSet& initial() const { return initial_; }
  [[nodiscard]] const StateSet& closure(std::uint32_t q) const {
    return closure_[q];
  }

  [[nodiscard]] StateSet step(const StateSet& from,
                              std::uint32_t symbol) const {
    StateSet next(words_, 0);
    if (symbol >= alphabet_size_) {
      return next;
    }
    const auto* row = &adj_[static_cast<std::size_t>(symbol) * num_states_];
    for (std::uint32_t q = 0; q < num_states_; ++q) {
      if (!detail::test_bit(from, q)) {
        continue;
      }
      for (std::uint32_t t : row[q]) {
        merge(next, closure_[t]);
      }
    }
    return next;
  }

  [[nodiscard]] bool accepts_set(const StateSet& s) const {
    return detail::any_common(s, accepting_);
  }

  [[nodiscard]] bool run(std::span<const std::uint32_t> word) const {
    StateSet current = initial_;
    for (std::uint32_t symbol : word) {
      current = step(current, symbol);
      if (detail::is_empty(current)) {
        return false;
      }
    }
    return accepts_set(current);
  }

  [[nodiscard]] std::uint32_t num_states() const { return num_states_; }
  [[nodiscard]] std::uint32_t alphabet_size() const { return alphabet_size_; }

 private:
  static void merge(StateSet& into, const StateSet& from) {
    for (std::size_t i = 0; i < into.size(); ++i) {
      into[i] |= from[i];
    }
  }

  std::uint32_t num_states_;
  std::uint32_t alphabet_size_;
  std::size_t words_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<StateSet> closure_;
  StateSet initial_;
  StateSet accepting_;
};

inline bool Nfa::accepts(std::span<const std::uint32_t> word) const {
  return CompiledNfa(*this).run(word);
}

inline Nfa nfa_union(const Nfa& a, const Nfa& b) {
  if (a.alphabet_size != b.alphabet_size) {
    throw std::invalid_argument("alphabet mismatch in union");
  }
  Nfa out;
  out.alphabet_size = a.alphabet_size;
  out.num_states = a.num_states + b.num_states + 1;
  const std::uint32_t start = a.num_states + b.num_states;
  const std::uint32_t shift = a.num_states;
  out.transitions = a.transitions;
  for (const auto& t : b.transitions) {
    out.add_transition(t.from + shift, t.symbol, t.to + shift);
  }
  out.initial = {start};
  for (std::uint32_t q : a.initial) {
    out.add_epsilon(start, q);
  }
  for (std::uint32_t q : b.initial) {
    out.add_epsilon(start, q + shift);
  }
  out.accepting = a.accepting;
  for (std::uint32_t q : b.accepting) {
    out.accepting.push_back(q + shift);
  }
  return out;
}

inline Nfa nfa_concat(const Nfa& a, const Nfa& b) {
  if (a.alphabet_size != b.alphabet_size) {
    throw std::invalid_argument("alphabet mismatch in concatenation");
  }
  Nfa out;
  out.alphabet_size = a.alphabet_size;
  out.num_states = a.num_states + b.num_states;
  const std::uint32_t shift = a.num_states;
  out.transitions = a.transitions;
  for (const auto& t : b.transitions) {
    out.add_transition(t.from + shift, t.symbol, t.to + shift);
  }
  out.initial = a.initial;
  for (std::uint32_t qa : a.accepting) {
    for (std::uint32_t qb : b.initial) {
      out.add_epsilon(qa, qb + shift);
    }
  }
  for (std::uint32_t q : b.accepting) {
    out.accepting.push_back(q + shift);
  }
  return out;
}

inline Nfa nfa_reverse(const Nfa& a) {
  Nfa out;
  out.alphabet_size = a.alphabet_size;
  out.num_states = a.num_states;
  for (const auto& t : a.transitions) {
    out.add_transition(t.to, t.symbol, t.from);
  }
  out.initial = a.accepting;
  out.accepting = a.initial;
  return out;
}

inline Nfa nfa_remove_epsilon(const Nfa& a) {
  CompiledNfa compiled(a);
  Nfa out;
  out.alphabet_size = a.alphabet_size;
  out.num_states = a.num_states;
  for (std::uint32_t q = 0; q < a.num_states; ++q) {
    for (std::uint32_t s = 0; s < a.alphabet_size; ++s) {
      const StateSet targets = compiled.step(compiled.closure(q), s);
      for (std::uint32_t r = 0; r < a.num_states; ++r) {
        if (detail::test_bit(targets, r)) {
          out.add_transition(q, static_cast<std::int32_t>(s), r);
        }
      }
    }
    if (compiled.accepts_set(compiled.closure(q))) {
      out.accepting.push_back(q);
    }
  }
  out.initial = a.initial;
  return out;
}

// Intersection by the product construction.
inline Nfa nfa_product(const Nfa& a_in, const Nfa& b_in) {
  if (a_in.alphabet_size != b_in.alphabet_size) {
    throw std::invalid_argument("alphabet mismatch in product");
  }
  const Nfa a = nfa_remove_epsilon(a_in);
  const Nfa b = nfa_remove_epsilon(b_in);
  Nfa out;
  out.alphabet_size = a.alphabet_size;
  out.num_states = a.num_states * b.num_states;
  const auto pair_id = [&](std::uint32_t qa, std::uint32_t qb) {
    return qa * b.num_states + qb;
  };
  std::vector<std::vector<Nfa::Transition>> by_symbol_b(a.alphabet_size);
  for (const auto& t : b.transitions) {
    by_symbol_b[static_cast<std::uint32_t>(t.symbol)].push_back(t);
  }
  for (const auto& ta : a.transitions) {
    for (const auto& tb : by_symbol_b[static_cast<std::uint32_t>(ta.symbol)]) {
      out.add_transition(pair_id(ta.from, tb.from), ta.symbol,
                         pair_id(ta.to, tb.to));
    }
  }
  for (std::uint32_t qa : a.initial) {
    for (std::uint32_t qb : b.initial) {
      out.initial.push_back(pair_id(qa, qb));
    }
  }
  for (std::uint32_t qa : a.accepting) {
    for (std::uint32_t qb : b.accepting) {
      out.accepting.push_back(pair_id(qa, qb));
    }
  }
  return out;
}

inline Nfa nfa_determinize(const Nfa& a) {
  CompiledNfa compiled(a);
  Nfa out;
  out.alphabet_size = a.alphabet_size;
  std::map<StateSet, std::uint32_t> ids;
  std::vector<StateSet> worklist;
  const auto intern = [&](const StateSet& s) {
    auto it = ids.find(s);
    if (it != ids.end()) {
      return it->second;
    }
    const std::uint32_t id = out.add_state();
    ids.emplace(s, id);
    worklist.push_back(s);
    if (compiled.accepts_set(s)) {
      out.accepting.push_back(id);
    }
    return id;
  };
  out.initial = {intern(compiled.initial())};
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    const StateSet current = worklist[i];
    const std::uint32_t from = ids.at(current);
    for (std::uint32_t s = 0; s < a.alphabet_size; ++s) {
      const StateSet next = compiled.step(current, s);
      if (detail::is_empty(next)) {
        continue;
      }
      out.add_transition(from, static_cast<std::int32_t>(s), intern(next));
    }
  }
  return out;
}

// Dense deterministic form for fast repeated stepping; 0 is the dead entry,
// otherwise table holds state + 1.
struct Dfa {
  std::uint32_t num_states = 0;
  std::uint32_t alphabet_size = 0;
  std::uint32_t initial = 0;
  std::vector<std::uint32_t> table;
  std::vector<char> accepting;

  [[nodiscard]] std::uint32_t step(std::uint32_t state,
                                   std::uint32_t symbol) const {
    return table[std::size_t{state} * alphabet_size + symbol];
  }
};

inline Dfa dfa_from(const Nfa& nfa) {
  const Nfa det = nfa_determinize(nfa);
  Dfa out;
  out.num_states = det.num_states;
  out.alphabet_size = det.alphabet_size;
  out.initial = det.initial.at(0);
  out.table.assign(std::size_t{det.num_states} * det.alphabet_size, 0);
  out.accepting.assign(det.num_states, 0);
  for (const auto& t : det.transitions) {
    out.table[std::size_t{t.from} * det.alphabet_size +
              static_cast<std::uint32_t>(t.symbol)] = t.to + 1;
  }
  for (std::uint32_t q : det.accepting) {
    out.accepting[q] = 1;
  }
  return out;
}

// Drops states that are not both reachable and co-reachable.
inline Nfa nfa_trim(const Nfa& a) {
  std::vector<std::vector<std::uint32_t>> fwd(a.num_states), bwd(a.num_states);
  for (const auto& t : a.transitions) {
    fwd[t.from].push_back(t.to);
    bwd[t.to].push_back(t.from);
  }
  const auto flood = [&](const std::vector<std::uint32_t>& seeds,
                         const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<char> seen(a.num_states, 0);
    std::vector<std::uint32_t> stack(seeds.begin(), seeds.end());
    for (std::uint32_t q : seeds) {
      seen[q] = 1;
    }
    while (!stack.empty()) {
      const std::uint32_t q = stack.back();
      stack.pop_back();
      for (std::uint32_t r : adj[q]) {
        if (!seen[r]) {
          seen[r] = 1;
          stack.push_back(r);
        }
      }
    }
    return seen;
  };
  const std::vector<char> reach = flood(a.initial, fwd);
  const std::vector<char> coreach = flood(a.accepting, bwd);
  std::vector<std::uint32_t> remap(a.num_states, UINT32_MAX);
  Nfa out;
  out.alphabet_size = a.alphabet_size;
  for (std::uint32_t q = 0; q < a.num_states; ++q) {
    if (reach[q] && coreach[q]) {
      remap[q] = out.add_state();
    }
  }
  for (const auto& t : a.transitions) {
    if (remap[t.from] != UINT32_MAX && remap[t.to] != UINT32_MAX) {
      out.add_transition(remap[t.from], t.symbol, remap[t.to]);
    }
  }
  for (std::uint32_t q : a.initial) {
    if (remap[q] != UINT32_MAX) {
      out.initial.push_back(remap[q]);
    }
  }
  for (std::uint32_t q : a.accepting) {
    if (remap[q] != UINT32_MAX) {
      out.accepting.push_back(remap[q]);
    }
  }
  return out;
}

}  // namespace psmon
