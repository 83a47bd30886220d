// automatic.hpp -- automatic and biautomatic structures: representative
// languages, multiplier automata, the E_n column transducers for lps, and the
// quadratic word problem.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "psmon/left_insertion.hpp"
#include "psmon/monoid.hpp"
#include "psmon/nfa.hpp"
#include "psmon/tableau.hpp"
#include "psmon/transducer.hpp"
#include "psmon/words.hpp"

namespace psmon {

enum class MultSide { Right, Left };  // L_a versus _aL

// ---------------------------------------------------------------------------
// rps_n: the representative language L and its right-multiplier automata.
// ---------------------------------------------------------------------------

namespace detail {

// Non-empty weakly decreasing words over {bottom..rank} ending in bottom:
// the readings of rPS columns with the given bottom symbol.  NFA symbol ids
// are value - 1.
inline Nfa rps_column_block(Symbol rank, Symbol bottom) {
  Nfa out;
  out.alphabet_size = rank;
  const std::uint32_t start = out.add_state();
  std::vector<std::uint32_t> at(rank + 1, 0);
  for (Symbol j = bottom; j <= rank; ++j) {
    at[j] = out.add_state();
    out.add_transition(start, static_cast<std::int32_t>(j - 1), at[j]);
  }
  for (Symbol j = bottom; j <= rank; ++j) {
    for (Symbol k = bottom; k <= j; ++k) {
      out.add_transition(at[j], static_cast<std::int32_t>(k - 1), at[k]);
    }
  }
  out.initial = {start};
  out.accepting = {at[bottom]};
  return out;
}

inline Nfa epsilon_only_nfa(Symbol rank) {
  Nfa out;
  out.alphabet_size = rank;
  out.num_states = 1;
  out.initial = {0};
  out.accepting = {0};
  return out;
}

// The single asynchronous insertion step {(epsilon, j)}.
inline PairTransducer insert_move(Symbol j) {
  PairTransducer out;
  out.num_states = 2;
  out.add_move(0, 0, j, 1);
  out.initial = {0};
  out.accepting = {1};
  return out;
}

inline PairTransducer epsilon_pair_transducer() {
  PairTransducer out;
  out.num_states = 1;
  out.initial = {0};
  out.accepting = {0};
  return out;
}

}  // namespace detail

// Accepts exactly the column readings of rPS tableaux over A_n: the union
// over subsets B of the concatenations of the per-bottom column blocks.
inline Nfa build_rep_language_rps(Symbol n) {
  if (n < 1) {
    throw std::invalid_argument("rank must be >= 1");
  }
  Nfa result = detail::epsilon_only_nfa(n);  // B = {}
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::optional<Nfa> piece;
    for (Symbol b = 1; b <= n; ++b) {
      if (!(mask & (std::uint64_t{1} << (b - 1)))) {
        continue;
      }
      Nfa block = detail::rps_column_block(n, b);
      piece = piece ? nfa_concat(*piece, block) : std::move(block);
    }
    result = nfa_union(result, *piece);
  }
  return result;
}

// The rational relation L_a = {(u, u with a right-inserted)} on L, assembled
// from diagonal column blocks and one insertion step; a = 0 gives the
// diagonal L_epsilon.
inline PairTransducer rps_multiplier_relation(Symbol n, Symbol a) {
  if (a > n) {
    throw std::invalid_argument("multiplier symbol out of rank");
  }
  if (a == 0) {
    return diagonal_transducer(build_rep_language_rps(n));
  }
  std::optional<PairTransducer> result;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Symbol> bottoms;
    for (Symbol b = 1; b <= n; ++b) {
      if (mask & (std::uint64_t{1} << (b - 1))) {
        bottoms.push_back(b);
      }
    }
    // Insertion target: the first bottom >= a, else a new column at the end.
    std::size_t target = bottoms.size();
    for (std::size_t i = 0; i < bottoms.size(); ++i) {
      if (bottoms[i] >= a) {
        target = i;
        break;
      }
    }
    PairTransducer piece = detail::epsilon_pair_transducer();
    for (std::size_t i = 0; i < bottoms.size(); ++i) {
      PairTransducer diag =
          diagonal_transducer(detail::rps_column_block(n, bottoms[i]));
      if (i == target) {
        diag = transducer_concat(diag, detail::insert_move(a));
      }
      piece = transducer_concat(piece, diag);
    }
    if (target == bottoms.size()) {
      piece = transducer_concat(piece, detail::insert_move(a));
    }
    result = result ? transducer_union(*result, piece) : std::move(piece);
  }
  return *result;
}

inline Nfa build_multiplier_rps(Symbol n, Symbol a) {
  return padded_automaton(rps_multiplier_relation(n, a), n, 2,
                          PairCoding::Right);
}

// ---------------------------------------------------------------------------
// rps_2: the biautomatic structure (A_2, J).
// ---------------------------------------------------------------------------

namespace detail {

struct RelAtom {
  Symbol in = 0;
  Symbol out = 0;
  bool star = false;
};

inline PairTransducer chain_transducer(const std::vector<RelAtom>& atoms) {
  PairTransducer out;
  const std::uint32_t n = static_cast<std::uint32_t>(atoms.size());
  out.num_states = n + 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (atoms[i].star) {
      out.add_move(i, atoms[i].in, atoms[i].out, i);
      out.add_move(i, 0, 0, i + 1);
    } else {
      out.add_move(i, atoms[i].in, atoms[i].out, i + 1);
    }
  }
  out.initial = {0};
  out.accepting = {n};
  return out;
}

}  // namespace detail

// J = {2}*{1}{2}*{1}* u {2}*, an alternative regular cross-section of rps_2.
inline Nfa build_rep_language_rps2_j() {
  Nfa out;
  out.alphabet_size = 2;
  out.num_states = 3;
  // state 0: leading 2-block (accepting: the {2^i} family)
  // state 1: after the single marker 1, inner 2-block
  // state 2: trailing 1-block
  out.add_transition(0, 1, 0);
  out.add_transition(0, 0, 1);
  out.add_transition(1, 1, 1);
  out.add_transition(1, 0, 2);
  out.add_transition(2, 0, 2);
  out.initial = {0};
  out.accepting = {0, 1, 2};
  return out;
}

// The J-relations, written as chains of diagonal loops and asynchronous
// insertions/deletions.
inline PairTransducer rps2_j_relation(MultSide side, Symbol a) {
  using detail::RelAtom;
  using detail::chain_transducer;
  const RelAtom d2{2, 2, true};
  const RelAtom d1{1, 1, true};
  if (a == 0) {
    return diagonal_transducer(build_rep_language_rps2_j());
  }
  if (side == MultSide::Right && a == 1) {
    return transducer_union(
        chain_transducer({d2, {1, 1, false}, d2, d1, {0, 1, false}}),
        chain_transducer({d2, {0, 1, false}}));
  }
  if (side == MultSide::Right && a == 2) {
    return transducer_union(
        chain_transducer({d2, {1, 1, false}, d2, {0, 2, false}, d1}),
        chain_transducer({d2, {0, 2, false}}));
  }
  if (side == MultSide::Left && a == 1) {
    return transducer_union(
        chain_transducer(
            {{0, 1, false}, d2, {1, 0, false}, d2, d1, {0, 1, false}}),
        chain_transducer({{0, 1, false}, d2}));
  }
  if (side == MultSide::Left && a == 2) {
    return transducer_union(
        chain_transducer({{0, 2, false}, d2, {1, 1, false}, d2, d1}),
        chain_transducer({{0, 2, false}, d2}));
  }
  throw std::invalid_argument("rps2 J relation: symbol must be 0, 1 or 2");
}

struct Rps2Biautomatic {
  Nfa rep;  // J
  // multipliers[(side, a, coding)] for a in {0 (epsilon), 1, 2}
  std::map<std::tuple<MultSide, Symbol, PairCoding>, Nfa> multipliers;

  [[nodiscard]] const Nfa& multiplier(MultSide side, Symbol a,
                                      PairCoding coding) const {
    return multipliers.at({side, a, coding});
  }
};

inline Rps2Biautomatic build_biautomatic_rps2() {
  Rps2Biautomatic out;
  out.rep = build_rep_language_rps2_j();
  for (MultSide side : {MultSide::Right, MultSide::Left}) {
    for (Symbol a : {Symbol{0}, Symbol{1}, Symbol{2}}) {
      const PairTransducer rel = rps2_j_relation(side, a);
      for (PairCoding coding : {PairCoding::Right, PairCoding::Left}) {
        out.multipliers.emplace(std::make_tuple(side, a, coding),
                                padded_automaton(rel, 2, 2, coding));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// lps_n: the column alphabet E_n, the language K, and the two transducers.
// ---------------------------------------------------------------------------

// E_n: one letter e_alpha per non-empty strictly decreasing word alpha over
// A_n, ordered by shortlex of the subscript for stable ids.
class ColumnAlphabet {
 public:
  explicit ColumnAlphabet(Symbol rank) : rank_(rank) {
    if (rank < 1 || rank > 16) {
      throw std::invalid_argument("column alphabet rank must be in 1..16");
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rank); ++mask) {
      Word alpha;
      for (Symbol v = rank; v >= 1; --v) {
        if (mask & (std::uint64_t{1} << (v - 1))) {
          alpha.push_back(v);
        }
      }
      letters_.push_back(std::move(alpha));
    }
    std::sort(letters_.begin(), letters_.end(), shortlex_less<Symbol>);
    for (std::uint32_t i = 0; i < letters_.size(); ++i) {
      index_.emplace(letters_[i], i);
    }
  }

  [[nodiscard]] Symbol rank() const { return rank_; }
  [[nodiscard]] std::uint32_t size() const {
    return static_cast<std::uint32_t>(letters_.size());
  }
  [[nodiscard]] const Word& subscript(std::uint32_t id) const {
    return letters_.at(id);
  }
  [[nodiscard]] std::uint32_t id_of(const Word& alpha) const {
    auto it = index_.find(alpha);
    if (it == index_.end()) {
      throw std::invalid_argument("not a column letter: " +
                                  format_word(alpha));
    }
    return it->second;
  }
  [[nodiscard]] Symbol min_of(std::uint32_t id) const {
    return letters_.at(id).back();
  }
  [[nodiscard]] Symbol max_of(std::uint32_t id) const {
    return letters_.at(id).front();
  }
  [[nodiscard]] std::string label(std::uint32_t id) const {
    return "e_" + format_word(letters_.at(id));
  }

 private:
  Symbol rank_;
  std::vector<Word> letters_;
  std::map<Word, std::uint32_t> index_;
};

// Words over E_n whose letters have weakly increasing minima: exactly the
// column decompositions of lPS tableaux.  The automaton stores only the
// previously read letter's minimum.
inline Nfa build_rep_language_lps(Symbol n) {
  const ColumnAlphabet ea(n);
  Nfa out;
  out.alphabet_size = ea.size();
  out.num_states = n + 1;  // 0 = nothing read; m = last minimum was m
  for (std::uint32_t id = 0; id < ea.size(); ++id) {
    const Symbol m = ea.min_of(id);
    out.add_transition(0, static_cast<std::int32_t>(id), m);
    for (Symbol prev = 1; prev <= m; ++prev) {
      out.add_transition(prev, static_cast<std::int32_t>(id), m);
    }
  }
  for (std::uint32_t q = 0; q <= n; ++q) {
    out.accepting.push_back(q);
  }
  out.initial = {0};
  return out;
}

// The subscript-concatenation homomorphism Q: e_alpha -> alpha.
inline Word apply_Q(const std::vector<std::uint32_t>& eword,
                    const ColumnAlphabet& ea) {
  Word out;
  for (std::uint32_t id : eword) {
    const Word& alpha = ea.subscript(id);
    out.insert(out.end(), alpha.begin(), alpha.end());
  }
  return out;
}

// The K-word of a canonical lPS word (its column decomposition, one letter
// per column).
inline std::vector<std::uint32_t> encode_columns(const Word& canonical,
                                                 const ColumnAlphabet& ea) {
  std::vector<std::uint32_t> out;
  for (const Column& c : column_configuration(canonical, Variant::Left)) {
    out.push_back(ea.id_of(c));
  }
  return out;
}

// K_{e_gamma} = {(u, v) : u e_gamma == v in lps_n}, recognized right-to-left.
// The machine searches for the leftmost column with bottom symbol > gamma;
// the decision is confirmed on the following (more leftward) read, so the
// guessed next letter lives in the control flow rather than the state.
// Tape symbols are E_n letter ids + 1.
inline PairTransducer right_mult_transducer_lps(Symbol n, Symbol gamma) {
  if (gamma < 1 || gamma > n) {
    throw std::invalid_argument("transducer symbol out of rank");
  }
  const ColumnAlphabet ea(n);
  PairTransducer out;
  out.direction = ReadDirection::RightToLeft;
  const std::uint32_t start = 0;
  const std::uint32_t copy_left_first = 1;
  const auto search_state = [&](Symbol m) { return 2 + (m - 1); };
  const auto copy_state = [&](Symbol m) { return 2 + n + (m - 1); };
  out.num_states = 2 + 2 * n;
  out.initial = {start};
  out.accepting = {copy_left_first};
  for (Symbol m = 1; m <= n; ++m) {
    out.accepting.push_back(copy_state(m));
  }

  // New rightmost column: output e_gamma before reading anything; the next
  // read must then have minimum <= gamma for u e_gamma to put gamma in a new
  // column (and for v to stay in K).
  const Word gamma_word{gamma};
  out.add_move(start, 0, ea.id_of(gamma_word) + 1, copy_state(gamma));

  for (std::uint32_t id = 0; id < ea.size(); ++id) {
    const Symbol m = ea.min_of(id);
    const Symbol tape = id + 1;
    if (m > gamma) {
      // Target column: alpha becomes alpha.gamma.
      Word modified = ea.subscript(id);
      modified.push_back(gamma);
      const Symbol modified_tape = ea.id_of(modified) + 1;
      out.add_move(start, tape, modified_tape, copy_left_first);
      // Or copy and keep searching further left.
      out.add_move(start, tape, tape, search_state(m));
      for (Symbol prev = m; prev <= n; ++prev) {
        out.add_move(search_state(prev), tape, modified_tape, copy_left_first);
        out.add_move(search_state(prev), tape, tape, search_state(m));
      }
    }
    // Confirmation read after the target was declared.
    if (m <= gamma) {
      out.add_move(copy_left_first, tape, tape, copy_state(m));
    }
    // Plain copying below the insertion point.
    for (Symbol prev = m; prev <= n; ++prev) {
      out.add_move(copy_state(prev), tape, tape, copy_state(m));
    }
  }
  return out;
}

// _{e_gamma}K = {(u, v) : e_gamma u == v in lps_n}, read left-to-right.  The
// pending column letter e_eta is carried in the state; each read splits the
// current column exactly as one left-insertion step does.
inline PairTransducer left_mult_transducer_lps(Symbol n, Symbol gamma) {
  if (gamma < 1 || gamma > n) {
    throw std::invalid_argument("transducer symbol out of rank");
  }
  const ColumnAlphabet ea(n);
  const std::uint32_t letters = ea.size();
  PairTransducer out;
  out.direction = ReadDirection::LeftToRight;
  // Pending(eta, m): insertion pending, last read minimum m (0 = none yet).
  // Inf(m): insertion complete, copying.  Done: flushed at end of input.
  const auto pending_state = [&](std::uint32_t eta, Symbol m) {
    return eta * (n + 1) + m;
  };
  const auto inf_state = [&](Symbol m) { return letters * (n + 1) + m; };
  const std::uint32_t done = letters * (n + 1) + n + 1;
  out.num_states = done + 1;
  out.initial = {pending_state(ea.id_of(Word{gamma}), 0)};
  out.accepting = {done};
  for (Symbol m = 0; m <= n; ++m) {
    out.accepting.push_back(inf_state(m));
  }

  for (std::uint32_t eta = 0; eta < letters; ++eta) {
    const Word& eta_word = ea.subscript(eta);
    const Symbol eta_min = eta_word.back();
    for (Symbol m = 0; m <= n; ++m) {
      // End-of-input flush.
      out.add_move(pending_state(eta, m), 0, eta + 1, done);
      for (std::uint32_t id = 0; id < letters; ++id) {
        const Word& alpha = ea.subscript(id);
        const Symbol alpha_min = alpha.back();
        if (alpha_min < m) {
          continue;  // u leaves K
        }
        const std::size_t split =
            detail::left_insertion_split(alpha, eta_min, Variant::Left);
        if (split == 0) {
          // Whole column absorbed below eta.
          Word joined = eta_word;
          joined.insert(joined.end(), alpha.begin(), alpha.end());
          out.add_move(pending_state(eta, m), id + 1, ea.id_of(joined) + 1,
                       inf_state(alpha_min));
        } else if (split == alpha.size()) {
          // Pass through: output the pending column, carry this one.
          out.add_move(pending_state(eta, m), id + 1, eta + 1,
                       pending_state(id, alpha_min));
        } else {
          Word emitted = eta_word;
          emitted.insert(emitted.end(), alpha.begin() + split, alpha.end());
          const Word carried(alpha.begin(), alpha.begin() + split);
          out.add_move(pending_state(eta, m), id + 1, ea.id_of(emitted) + 1,
                       pending_state(ea.id_of(carried), alpha_min));
        }
      }
    }
  }
  for (std::uint32_t id = 0; id < letters; ++id) {
    const Symbol alpha_min = ea.min_of(id);
    for (Symbol m = 0; m <= alpha_min; ++m) {
      out.add_move(inf_state(m), id + 1, id + 1, inf_state(alpha_min));
    }
  }
  return out;
}

// Expands an E_n-tape transducer through Q on both tapes: every letter move
// becomes a chain of single-symbol moves pairing the subscripts position by
// position.
inline PairTransducer q_expand(const PairTransducer& t,
                               const ColumnAlphabet& ea) {
  if (t.direction != ReadDirection::LeftToRight) {
    throw std::invalid_argument("q_expand expects a left-to-right transducer");
  }
  PairTransducer out;
  out.num_states = t.num_states;
  out.initial = t.initial;
  out.accepting = t.accepting;
  for (const auto& m : t.moves) {
    const Word in_word = m.in == 0 ? Word{} : ea.subscript(m.in - 1);
    const Word out_word = m.out == 0 ? Word{} : ea.subscript(m.out - 1);
    const std::size_t steps = std::max(in_word.size(), out_word.size());
    if (steps == 0) {
      out.add_move(m.from, 0, 0, m.to);
      continue;
    }
    std::uint32_t prev = m.from;
    for (std::size_t i = 0; i < steps; ++i) {
      const std::uint32_t next =
          i + 1 == steps ? m.to : out.add_state();
      out.add_move(prev, i < in_word.size() ? in_word[i] : 0,
                   i < out_word.size() ? out_word[i] : 0, next);
      prev = next;
    }
  }
  return out;
}

// L = (K)Q, the lps representative language over A_n.
inline Nfa build_rep_language_lps_words(Symbol n) {
  const ColumnAlphabet ea(n);
  const Nfa k = build_rep_language_lps(n);
  Nfa out;
  out.alphabet_size = n;
  out.num_states = k.num_states;
  out.initial = k.initial;
  out.accepting = k.accepting;
  for (const auto& t : k.transitions) {
    if (t.symbol == Nfa::kEpsilon) {
      out.add_epsilon(t.from, t.to);
      continue;
    }
    const Word& alpha = ea.subscript(static_cast<std::uint32_t>(t.symbol));
    std::uint32_t prev = t.from;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      const std::uint32_t next =
          i + 1 == alpha.size() ? t.to : out.add_state();
      out.add_transition(prev, static_cast<std::int32_t>(alpha[i] - 1), next);
      prev = next;
    }
  }
  return out;
}

// The padded multiplier automata of the biautomatic structure for lps_n:
// Q^{-1} o K_{e_gamma} o Q (or the left-multiplication version), compiled
// under the requested coding.  gamma = 0 gives the diagonal over L.
inline Nfa build_multiplier_lps(Symbol n, Symbol gamma, MultSide side,
                                PairCoding coding) {
  const ColumnAlphabet ea(n);
  PairTransducer letters;
  if (gamma == 0) {
    letters = diagonal_transducer(build_rep_language_lps(n));
  } else if (side == MultSide::Right) {
    PairTransducer rl = transducer_reverse(right_mult_transducer_lps(n, gamma));
    letters = std::move(rl);
  } else {
    letters = left_mult_transducer_lps(n, gamma);
  }
  return padded_automaton(q_expand(letters, ea), n, std::size_t{n} + 1,
                          coding);
}

// ---------------------------------------------------------------------------
// The word problem through the automatic structure.
// ---------------------------------------------------------------------------

// Holds the representative language and the determinized right-multiplier
// automata of a monoid; representatives are computed by stepping through the
// multipliers one generator at a time.
class AutomaticStructure {
 public:
  explicit AutomaticStructure(const MonoidSpec& m)
      : spec_(m),
        rank_(required_rank(m, "automatic structure")),
        pairs_(rank_),
        rep_(m.variant == Variant::Right ? build_rep_language_rps(rank_)
                                         : build_rep_language_lps_words(rank_)) {
    for (Symbol a = 1; a <= rank_; ++a) {
      const Nfa nfa =
          m.variant == Variant::Right
              ? build_multiplier_rps(rank_, a)
              : build_multiplier_lps(rank_, a, MultSide::Right,
                                     PairCoding::Right);
      multipliers_.push_back(dfa_from(nfa));
    }
  }

  [[nodiscard]] const MonoidSpec& spec() const { return spec_; }
  [[nodiscard]] const Nfa& rep() const { return rep_; }

  // The L-representative of the element of w, built by iterated multiplier
  // steps from the empty word.
  [[nodiscard]] Word representative(const Word& w) const {
    validate_word(w, spec_);
    Word rep;
    for (Symbol a : w) {
      rep = multiply_representative(rep, a);
    }
    return rep;
  }

  [[nodiscard]] bool equivalent(const Word& u, const Word& v) const {
    return representative(u) == representative(v);
  }

 private:
  // The unique r' with pad_right(r, r') accepted by the a-multiplier; r' has
  // length |r| + 1 by multihomogeneity.
  [[nodiscard]] Word multiply_representative(const Word& r, Symbol a) const {
    const Dfa& dfa = multipliers_[a - 1];
    Word result(r.size() + 1, 0);
    std::set<std::pair<std::size_t, std::uint32_t>> failed;
    if (!extend(dfa, r, 0, dfa.initial, result, failed)) {
      throw std::logic_error("multiplier automaton rejected every completion");
    }
    return result;
  }

  bool extend(const Dfa& dfa, const Word& r, std::size_t pos,
              std::uint32_t state, Word& result,
              std::set<std::pair<std::size_t, std::uint32_t>>& failed) const {
    if (pos == r.size() + 1) {
      return dfa.accepting[state];
    }
    if (failed.count({pos, state})) {
      return false;
    }
    const Symbol left = pos < r.size() ? r[pos] : 0;
    for (Symbol b = 1; b <= rank_; ++b) {
      const std::uint32_t next =
          dfa.step(state, pairs_.id(PaddedPairSymbol{left, b}));
      if (next == 0) {
        continue;
      }
      result[pos] = b;
      if (extend(dfa, r, pos + 1, next - 1, result, failed)) {
        return true;
      }
    }
    failed.insert({pos, state});
    return false;
  }

  MonoidSpec spec_;
  Symbol rank_;
  PairAlphabet pairs_;
  Nfa rep_;
  std::vector<Dfa> multipliers_;
};

// Decides u == v through the automatic structure; agrees with equiv and runs
// in quadratic time in the word lengths once the structure is built.
inline bool word_problem_automatic(const MonoidSpec& m, const Word& u,
                                   const Word& v) {
  return AutomaticStructure(m).equivalent(u, v);
}

// The witness family behind the non-regularity of (_1L)delta_R: the pair
// (2^a 1^a, 1^{a+1} 2^a) lies in _1L for every a.  A demonstration, not a
// proof.
inline std::pair<Word, Word> nonregularity_demo(Symbol n, std::size_t alpha) {
  if (n < 2) {
    throw std::invalid_argument("non-regularity witness needs rank >= 2");
  }
  if (alpha < 1) {
    throw std::invalid_argument("pumping length must be >= 1");
  }
  Word u(alpha, 2);
  u.insert(u.end(), alpha, 1);
  Word v(alpha + 1, 1);
  v.insert(v.end(), alpha, 2);
  if (!is_canonical_word(u, Variant::Right) ||
      !is_canonical_word(v, Variant::Right)) {
    throw std::logic_error("witness components left the language L");
  }
  Word one_u{1};
  one_u.insert(one_u.end(), u.begin(), u.end());
  if (from_word_right(one_u, Variant::Right) !=
      from_word_right(v, Variant::Right)) {
    throw std::logic_error("witness pair is not in _1L");
  }
  return {u, v};
}

}  // namespace psmon
