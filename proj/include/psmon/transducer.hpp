// transducer.hpp -- pair transducers (rational relations) and the compiler
// from bounded-length-difference relations to padded-pair automata.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "psmon/nfa.hpp"
#include "psmon/words.hpp"

namespace psmon {

enum class ReadDirection { LeftToRight, RightToLeft };
enum class PairCoding { Right, Left };  // delta_R / delta_L

// One component of a padded pair word; 0 stands for the padding symbol $.
struct PaddedPairSymbol {
  Symbol left = 0;
  Symbol right = 0;

  friend bool operator==(PaddedPairSymbol a, PaddedPairSymbol b) {
    return a.left == b.left && a.right == b.right;
  }
};

// Pairs word components position-wise from the left; the shorter word is
// padded at the right end.
inline std::vector<PaddedPairSymbol> pad_right(const Word& u, const Word& v) {
  std::vector<PaddedPairSymbol> out;
  const std::size_t len = std::max(u.size(), v.size());
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(PaddedPairSymbol{i < u.size() ? u[i] : 0,
                                   i < v.size() ? v[i] : 0});
  }
  return out;
}

// Pairs from the right; the shorter word is padded at the left end.
inline std::vector<PaddedPairSymbol> pad_left(const Word& u, const Word& v) {
  std::vector<PaddedPairSymbol> out;
  const std::size_t len = std::max(u.size(), v.size());
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t du = len - u.size();
    const std::size_t dv = len - v.size();
    out.push_back(PaddedPairSymbol{i >= du ? u[i - du] : 0,
                                   i >= dv ? v[i - dv] : 0});
  }
  return out;
}

// Dense ids for (A_rank u {$})^2 minus ($,$).
class PairAlphabet {
 public:
  explicit PairAlphabet(Symbol rank) : rank_(rank) {}

  [[nodiscard]] Symbol rank() const { return rank_; }
  [[nodiscard]] std::uint32_t size() const {
    return (rank_ + 1) * (rank_ + 1) - 1;
  }

  [[nodiscard]] std::uint32_t id(PaddedPairSymbol p) const {
    if (p.left > rank_ || p.right > rank_ || (p.left == 0 && p.right == 0)) {
      throw std::invalid_argument("pair symbol out of range");
    }
    return p.left * (rank_ + 1) + p.right - 1;
  }

  [[nodiscard]] PaddedPairSymbol symbol(std::uint32_t id) const {
    const std::uint32_t raw = id + 1;
    return PaddedPairSymbol{raw / (rank_ + 1), raw % (rank_ + 1)};
  }

  [[nodiscard]] std::string label(std::uint32_t id) const {
    const PaddedPairSymbol p = symbol(id);
    const auto part = [](Symbol s) {
      return s == 0 ? std::string("$") : std::to_string(s);
    };
    return "(" + part(p.left) + "," + part(p.right) + ")";
  }

  [[nodiscard]] std::vector<std::uint32_t> encode(
      const std::vector<PaddedPairSymbol>& pairs) const {
    std::vector<std::uint32_t> out;
    out.reserve(pairs.size());
    for (PaddedPairSymbol p : pairs) {
      out.push_back(id(p));
    }
    return out;
  }

 private:
  Symbol rank_;
};

// A finite transducer over two tapes; move labels use 0 for epsilon.  Tape
// symbols are either alphabet symbols or 1-based letter numbers of a derived
// alphabet, depending on the construction.
struct PairTransducer {
  struct Move {
    std::uint32_t from = 0;
    Symbol in = 0;
    Symbol out = 0;
    std::uint32_t to = 0;
  };

  std::uint32_t num_states = 0;
  std::vector<Move> moves;
  std::vector<std::uint32_t> initial;
  std::vector<std::uint32_t> accepting;
  ReadDirection direction = ReadDirection::LeftToRight;

  std::uint32_t add_state() { return num_states++; }

  void add_move(std::uint32_t from, Symbol in, Symbol out, std::uint32_t to) {
    moves.push_back(Move{from, in, out, to});
  }
};

// Structural reversal; flips the reading direction, recognizing the same
// relation.
inline PairTransducer transducer_reverse(const PairTransducer& t) {
  PairTransducer out;
  out.num_states = t.num_states;
  for (const auto& m : t.moves) {
    out.add_move(m.to, m.in, m.out, m.from);
  }
  out.initial = t.accepting;
  out.accepting = t.initial;
  out.direction = t.direction == ReadDirection::LeftToRight
                      ? ReadDirection::RightToLeft
                      : ReadDirection::LeftToRight;
  return out;
}

inline PairTransducer transducer_union(const PairTransducer& a,
                                       const PairTransducer& b) {
  if (a.direction != b.direction) {
    throw std::invalid_argument("direction mismatch in union");
  }
  PairTransducer out;
  out.direction = a.direction;
  out.num_states = a.num_states + b.num_states;
  const std::uint32_t shift = a.num_states;
  out.moves = a.moves;
  for (const auto& m : b.moves) {
    out.add_move(m.from + shift, m.in, m.out, m.to + shift);
  }
  out.initial = a.initial;
  out.accepting = a.accepting;
  for (std::uint32_t q : b.initial) {
    out.initial.push_back(q + shift);
  }
  for (std::uint32_t q : b.accepting) {
    out.accepting.push_back(q + shift);
  }
  return out;
}

inline PairTransducer transducer_concat(const PairTransducer& a,
                                        const PairTransducer& b) {
  if (a.direction != b.direction) {
    throw std::invalid_argument("direction mismatch in concatenation");
  }
  PairTransducer out;
  out.direction = a.direction;
  out.num_states = a.num_states + b.num_states;
  const std::uint32_t shift = a.num_states;
  out.moves = a.moves;
  for (const auto& m : b.moves) {
    out.add_move(m.from + shift, m.in, m.out, m.to + shift);
  }
  out.initial = a.initial;
  for (std::uint32_t qa : a.accepting) {
    for (std::uint32_t qb : b.initial) {
      out.add_move(qa, 0, 0, qb + shift);
    }
  }
  for (std::uint32_t q : b.accepting) {
    out.accepting.push_back(q + shift);
  }
  return out;
}

// The diagonal relation {(w, w) : w accepted by nfa}, with nfa symbol ids
// relabeled through symbol_of (defaults to id + 1).
inline PairTransducer diagonal_transducer(const Nfa& nfa) {
  PairTransducer out;
  out.num_states = nfa.num_states;
  for (const auto& t : nfa.transitions) {
    if (t.symbol == Nfa::kEpsilon) {
      out.add_move(t.from, 0, 0, t.to);
    } else {
      const Symbol s = static_cast<Symbol>(t.symbol) + 1;
      out.add_move(t.from, s, s, t.to);
    }
  }
  out.initial = nfa.initial;
  out.accepting = nfa.accepting;
  return out;
}

// Membership test honoring the declared reading direction.
inline bool transducer_accepts(const PairTransducer& t, const Word& u,
                               const Word& v) {
  Word ru = u;
  Word rv = v;
  if (t.direction == ReadDirection::RightToLeft) {
    std::reverse(ru.begin(), ru.end());
    std::reverse(rv.begin(), rv.end());
  }
  std::vector<std::vector<const PairTransducer::Move*>> from(t.num_states);
  for (const auto& m : t.moves) {
    from[m.from].push_back(&m);
  }
  std::set<std::tuple<std::uint32_t, std::size_t, std::size_t>> seen;
  std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>> stack;
  for (std::uint32_t q : t.initial) {
    stack.emplace_back(q, 0, 0);
  }
  std::set<std::uint32_t> accepting(t.accepting.begin(), t.accepting.end());
  while (!stack.empty()) {
    const auto [q, i, j] = stack.back();
    stack.pop_back();
    if (!seen.insert({q, i, j}).second) {
      continue;
    }
    if (i == ru.size() && j == rv.size() && accepting.count(q)) {
      return true;
    }
    for (const auto* m : from[q]) {
      std::size_t ni = i;
      std::size_t nj = j;
      if (m->in != 0) {
        if (i >= ru.size() || ru[i] != m->in) {
          continue;
        }
        ni = i + 1;
      }
      if (m->out != 0) {
        if (j >= rv.size() || rv[j] != m->out) {
          continue;
        }
        nj = j + 1;
      }
      stack.emplace_back(m->to, ni, nj);
    }
  }
  return false;
}

// All outputs v with (u, v) in the relation; for machines whose outputs are
// finitely branching on each input.  Results are in tape order.
inline std::vector<Word> transducer_outputs(const PairTransducer& t,
                                            const Word& u) {
  Word ru = u;
  if (t.direction == ReadDirection::RightToLeft) {
    std::reverse(ru.begin(), ru.end());
  }
  std::vector<std::vector<const PairTransducer::Move*>> from(t.num_states);
  for (const auto& m : t.moves) {
    from[m.from].push_back(&m);
  }
  std::set<std::uint32_t> accepting(t.accepting.begin(), t.accepting.end());
  std::set<Word> results;
  // Depth-first over (state, input position, output so far); cycles of pure
  // epsilon moves would not terminate, but the machines built here have none
  // that both read and write nothing in a loop.
  std::vector<std::tuple<std::uint32_t, std::size_t, Word>> stack;
  for (std::uint32_t q : t.initial) {
    stack.emplace_back(q, 0, Word{});
  }
  std::set<std::tuple<std::uint32_t, std::size_t, Word>> seen;
  while (!stack.empty()) {
    auto [q, i, out] = stack.back();
    stack.pop_back();
    if (!seen.insert({q, i, out}).second) {
      continue;
    }
    if (i == ru.size() && accepting.count(q)) {
      results.insert(out);
    }
    for (const auto* m : from[q]) {
      std::size_t ni = i;
      if (m->in != 0) {
        if (i >= ru.size() || ru[i] != m->in) {
          continue;
        }
        ni = i + 1;
      }
      Word nout = out;
      if (m->out != 0) {
        nout.push_back(m->out);
      }
      stack.emplace_back(m->to, ni, std::move(nout));
    }
  }
  std::vector<Word> out(results.begin(), results.end());
  if (t.direction == ReadDirection::RightToLeft) {
    for (Word& w : out) {
      std::reverse(w.begin(), w.end());
    }
  }
  return out;
}

// Compiles a left-to-right transducer over A_rank into an automaton over the
// padded pair alphabet, accepting {coding(u, v) : (u, v) in the relation}.
// Requires every accepting path of the transducer to stay within lag_cap
// unconsumed symbols per tape, which holds for relations with length
// difference bounded by lag_cap that are built from near-synchronous pieces.
inline Nfa padded_automaton(const PairTransducer& t, Symbol rank,
                            std::size_t lag_cap, PairCoding coding) {
  if (coding == PairCoding::Left) {
    PairTransducer reversed = transducer_reverse(t);
    reversed.direction = ReadDirection::LeftToRight;
    return nfa_reverse(padded_automaton(reversed, rank, lag_cap,
                                        PairCoding::Right));
  }
  if (t.direction != ReadDirection::LeftToRight) {
    throw std::invalid_argument(
        "padded_automaton expects a left-to-right transducer");
  }
  if (rank >= 255) {
    throw std::invalid_argument("padded automata support ranks below 255");
  }
  const PairAlphabet pairs(rank);

  // Simulation state: transducer state, the symbols each tape has shown but
  // the transducer has not yet consumed, and the padding phase (0 = both
  // tapes active, 1 = left tape exhausted, 2 = right tape exhausted).
  using SimState = std::tuple<std::uint32_t, Word, Word, int>;
  const auto pack = [](const SimState& s) {
    const auto& [q, bu, bv, phase] = s;
    std::string key;
    key.reserve(6 + bu.size() + bv.size());
    key.push_back(static_cast<char>(q & 0xff));
    key.push_back(static_cast<char>((q >> 8) & 0xff));
    key.push_back(static_cast<char>((q >> 16) & 0xff));
    key.push_back(static_cast<char>((q >> 24) & 0xff));
    key.push_back(static_cast<char>(phase));
    for (Symbol a : bu) {
      key.push_back(static_cast<char>(a));
    }
    key.push_back('\xff');
    for (Symbol a : bv) {
      key.push_back(static_cast<char>(a));
    }
    return key;
  };
  std::unordered_map<std::string, std::uint32_t> ids;
  std::vector<SimState> worklist;

  Nfa out;
  out.alphabet_size = pairs.size();

  std::vector<std::vector<const PairTransducer::Move*>> from(t.num_states);
  for (const auto& m : t.moves) {
    from[m.from].push_back(&m);
  }
  std::set<std::uint32_t> accepting(t.accepting.begin(), t.accepting.end());

  const auto intern = [&](const SimState& s) {
    const std::string key = pack(s);
    auto it = ids.find(key);
    if (it != ids.end()) {
      return it->second;
    }
    const std::uint32_t id = out.add_state();
    ids.emplace(key, id);
    worklist.push_back(s);
    const auto& [q, bu, bv, phase] = s;
    if (accepting.count(q) && bu.empty() && bv.empty()) {
      out.accepting.push_back(id);
    }
    return id;
  };

  for (std::uint32_t q : t.initial) {
    out.initial.push_back(intern({q, {}, {}, 0}));
  }

  for (std::size_t w = 0; w < worklist.size(); ++w) {
    const SimState current = worklist[w];
    const std::uint32_t id = ids.at(pack(current));
    const auto& [q, bu, bv, phase] = current;

    // Transducer moves consume buffered symbols; epsilon transitions of the
    // padded automaton.
    for (const auto* m : from[q]) {
      Word nbu = bu;
      Word nbv = bv;
      if (m->in != 0) {
        if (nbu.empty() || nbu.front() != m->in) {
          continue;
        }
        nbu.erase(nbu.begin());
      }
      if (m->out != 0) {
        if (nbv.empty() || nbv.front() != m->out) {
          continue;
        }
        nbv.erase(nbv.begin());
      }
      out.add_epsilon(id, intern({m->to, std::move(nbu), std::move(nbv),
                                  phase}));
    }

    // Reading one padded pair feeds the buffers.
    for (Symbol l = 0; l <= rank; ++l) {
      for (Symbol r = 0; r <= rank; ++r) {
        if (l == 0 && r == 0) {
          continue;
        }
        int nphase = phase;
        if (l == 0) {
          if (phase == 2) {
            continue;  // left tape already padded on the other side
          }
          nphase = 1;
        } else if (phase == 1) {
          continue;  // left tape has ended; only $ may follow
        }
        if (r == 0) {
          if (nphase == 1) {
            continue;
          }
          nphase = 2;
        } else if (phase == 2) {
          continue;
        }
        if (l != 0 && bu.size() >= lag_cap) {
          continue;
        }
        if (r != 0 && bv.size() >= lag_cap) {
          continue;
        }
        // Along a run that consumes as early as possible, one buffer is empty
        // whenever the transducer blocks, so the combined backlog never needs
        // to exceed the path lag plus one pair.
        if (bu.size() + bv.size() + (l != 0 ? 1 : 0) + (r != 0 ? 1 : 0) >
            lag_cap + 1) {
          continue;
        }
        Word nbu = bu;
        Word nbv = bv;
        if (l != 0) {
          nbu.push_back(l);
        }
        if (r != 0) {
          nbv.push_back(r);
        }
        out.add_transition(id, static_cast<std::int32_t>(
                                   pairs.id(PaddedPairSymbol{l, r})),
                           intern({q, std::move(nbu), std::move(nbv), nphase}));
      }
    }
  }
  return nfa_trim(out);
}

}  // namespace psmon
