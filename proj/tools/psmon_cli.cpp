// psmon_cli.cpp -- command-line front end: tableaux, the word problem, normal
// forms, growth, identities, automata export, and the benchmark harness.

#include <unistd.h>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psmon/psmon.hpp"

namespace {

using namespace psmon;

Variant parse_variant(const std::string& name) {
  if (name == "left") {
    return Variant::Left;
  }
  if (name == "right") {
    return Variant::Right;
  }
  throw std::invalid_argument("--variant must be 'left' or 'right'");
}

Word read_word(const std::string& text, Symbol rank) {
  const Word w = parse_word(text);
  if (rank > 0) {
    validate_word(w, rank);
  }
  return w;
}

bool color_enabled() {
  return ansi_enabled() && isatty(STDOUT_FILENO) != 0;
}

// --- tableau ----------------------------------------------------------------

int cmd_tableau(const std::string& variant_name, const std::string& word_text,
                Symbol rank, const std::string& algorithm,
                const std::string& format) {
  const Variant v = parse_variant(variant_name);
  const Word w = read_word(word_text, rank);
  Tableau t;
  if (algorithm == "right") {
    t = from_word_right(w, v);
  } else if (algorithm == "left") {
    t = from_word_left(w, v);
  } else if (algorithm == "subseq") {
    t.variant = v;
    for (Word& chain : minimal_subsequences(w, v)) {
      t.columns.push_back(std::move(chain));
    }
  } else {
    throw std::invalid_argument("--algorithm must be 'right', 'left' or 'subseq'");
  }
  if (format == "json") {
    nlohmann::json j = tableau_to_json(t);
    j["shape"] = shape(t);
    j["columns_text"] = format_columns(t.columns);
    std::cout << j.dump(2) << '\n';
  } else if (format == "ascii") {
    std::cout << tableau_to_ascii(t, color_enabled());
    std::cout << "shape:   " << format_shape(shape(t)) << '\n';
    std::cout << "columns: " << format_columns(t.columns) << '\n';
  } else {
    throw std::invalid_argument("--format must be 'ascii' or 'json'");
  }
  return 0;
}

// --- equiv ------------------------------------------------------------------

int cmd_equiv(const std::string& variant_name, Symbol rank,
              const std::string& u_text, const std::string& v_text) {
  const MonoidSpec m{parse_variant(variant_name),
                     rank > 0 ? std::optional<Symbol>(rank) : std::nullopt};
  const Word u = read_word(u_text, rank);
  const Word v = read_word(v_text, rank);
  std::cout << (equiv(u, v, m) ? "equivalent" : "not equivalent") << '\n';
  return 0;
}

// --- nf ---------------------------------------------------------------------

int cmd_nf(const std::string& variant_name, Symbol rank,
           const std::string& word_text, bool trace) {
  const Variant v = parse_variant(variant_name);
  const Word w = read_word(word_text, rank);
  const auto [nf, steps] = normal_form(w, v);
  if (trace) {
    for (const RewriteStep& step : steps.steps) {
      std::cout << "pos=" << step.pos << ' ' << format_word(step.rule.lhs)
                << " -> " << format_word(step.rule.rhs) << '\n';
    }
  }
  std::cout << format_word(nf) << '\n';
  return 0;
}

// --- growth -----------------------------------------------------------------

int cmd_growth(const std::string& variant_name, Symbol rank,
               std::size_t max_len, const std::string& format) {
  const MonoidSpec m{parse_variant(variant_name), rank};
  const GrowthTable table = growth(m, max_len);
  if (format == "json") {
    nlohmann::json j = growth_to_json(table);
    j["variant"] = variant_name;
    j["rank"] = rank;
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << growth_to_csv(table);
  } else if (format == "table") {
    std::cout << growth_to_table(table);
  } else {
    throw std::invalid_argument("--format must be 'table', 'json' or 'csv'");
  }
  return 0;
}

// --- identity ---------------------------------------------------------------

void print_identity_result(const IdentityTerm& id,
                           const std::optional<IdentityCounterexample>& ce,
                           std::size_t max_sub_len) {
  std::cout << id.lhs << " = " << id.rhs << ": ";
  if (!ce) {
    std::cout << "holds for all substitutions of length <= " << max_sub_len
              << '\n';
    return;
  }
  std::cout << "fails at";
  for (const auto& [var, value] : ce->assignment) {
    std::cout << ' ' << var << '=' << format_word(value);
  }
  std::cout << " (" << format_word(ce->lhs_value)
            << " != " << format_word(ce->rhs_value) << ")\n";
}

int cmd_identity_check(const std::string& variant_name, Symbol rank,
                       const std::string& lhs, const std::string& rhs,
                       std::size_t max_sub_len) {
  const MonoidSpec m{parse_variant(variant_name), rank};
  const IdentityTerm id{lhs, rhs};
  print_identity_result(id, check_identity(id, m, max_sub_len), max_sub_len);
  return 0;
}

int cmd_identity_search(const std::string& variant_name, Symbol rank,
                        std::size_t max_id_len, std::size_t max_sub_len) {
  const MonoidSpec m{parse_variant(variant_name), rank};
  std::size_t candidates = 0;
  std::size_t surviving = 0;
  // Two-variable candidates with matching variable counts; one check per
  // unordered pair.
  std::vector<std::string> sides{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_id_len; ++len) {
    const std::size_t end = sides.size();
    for (std::size_t i = begin; i < end; ++i) {
      sides.push_back(sides[i] + "x");
      sides.push_back(sides[i] + "y");
    }
    begin = end;
  }
  const auto x_count = [](const std::string& s) {
    return std::count(s.begin(), s.end(), 'x');
  };
  for (std::size_t i = 1; i < sides.size(); ++i) {
    for (std::size_t j = i + 1; j < sides.size(); ++j) {
      const std::string& lhs = sides[i];
      const std::string& rhs = sides[j];
      if (lhs.size() != rhs.size() || x_count(lhs) != x_count(rhs)) {
        continue;
      }
      ++candidates;
      const IdentityTerm id{lhs, rhs};
      const auto ce = check_identity(id, m, max_sub_len);
      if (!ce) {
        ++surviving;
        print_identity_result(id, ce, max_sub_len);
      }
    }
  }
  std::cout << candidates << " candidates of length <= " << max_id_len << ", "
            << surviving << " with no counterexample of length <= "
            << max_sub_len << '\n';
  return 0;
}

// --- automaton --------------------------------------------------------------

int cmd_automaton(const std::string& monoid, Symbol rank,
                  const std::string& object, const std::string& coding_name,
                  const std::string& side_name, const std::string& format) {
  if (monoid != "rps" && monoid != "lps") {
    throw std::invalid_argument("--monoid must be 'rps' or 'lps'");
  }
  PairCoding coding;
  if (coding_name == "dr") {
    coding = PairCoding::Right;
  } else if (coding_name == "dl") {
    coding = PairCoding::Left;
  } else {
    throw std::invalid_argument("--coding must be 'dr' or 'dl'");
  }
  MultSide side;
  if (side_name == "right") {
    side = MultSide::Right;
  } else if (side_name == "left") {
    side = MultSide::Left;
  } else {
    throw std::invalid_argument("--side must be 'right' or 'left'");
  }
  const auto parse_symbol = [&](const std::string& text) -> Symbol {
    if (text == "e" || text == "eps") {
      return 0;
    }
    const Word w = parse_word(text);
    if (w.size() != 1 || w[0] > rank) {
      throw std::invalid_argument(
          "multiplier symbol must be 'e' or a single symbol within the rank");
    }
    return w[0];
  };

  Nfa automaton;
  SymbolLabeler labeler;
  const PairAlphabet pairs(rank);
  const auto pair_labeler = [pairs](std::uint32_t s) { return pairs.label(s); };
  const auto symbol_labeler = [](std::uint32_t s) {
    return std::to_string(s + 1);
  };

  if (object == "rep") {
    automaton = monoid == "rps" ? build_rep_language_rps(rank)
                                : build_rep_language_lps_words(rank);
    labeler = symbol_labeler;
  } else if (object == "J") {
    if (monoid != "rps" || rank != 2) {
      throw std::invalid_argument("the J structure exists for rps of rank 2");
    }
    automaton = build_rep_language_rps2_j();
    labeler = symbol_labeler;
  } else if (object.rfind("J:multiplier:", 0) == 0) {
    if (monoid != "rps" || rank != 2) {
      throw std::invalid_argument("the J structure exists for rps of rank 2");
    }
    const Symbol a = parse_symbol(object.substr(13));
    automaton = padded_automaton(rps2_j_relation(side, a), 2, 2, coding);
    labeler = pair_labeler;
  } else if (object.rfind("multiplier:", 0) == 0) {
    const Symbol a = parse_symbol(object.substr(11));
    if (monoid == "rps") {
      if (side != MultSide::Right || coding != PairCoding::Right) {
        throw std::invalid_argument(
            "rps multipliers exist for --side right --coding dr only; for "
            "rank 2 the J structure covers the other combinations "
            "(--object J:multiplier:<a>)");
      }
      automaton = build_multiplier_rps(rank, a);
    } else {
      automaton = build_multiplier_lps(rank, a, side, coding);
    }
    labeler = pair_labeler;
  } else {
    throw std::invalid_argument(
        "--object must be 'rep', 'J', 'multiplier:<a>' or "
        "'J:multiplier:<a>' with <a> a symbol or 'e'");
  }

  if (format == "dot") {
    std::cout << nfa_to_dot(automaton, labeler);
  } else if (format == "json") {
    std::cout << nfa_to_json(automaton, labeler).dump(2) << '\n';
  } else {
    throw std::invalid_argument("--format must be 'dot' or 'json'");
  }
  return 0;
}

// --- bench ------------------------------------------------------------------

Word bench_word(const std::string& kind, std::size_t length, Symbol rank,
                std::uint64_t seed) {
  Word w(length, 0);
  if (kind == "increasing" || kind == "decreasing") {
    for (std::size_t i = 0; i < length; ++i) {
      w[i] = static_cast<Symbol>(i % rank + 1);
    }
    std::sort(w.begin(), w.end());
    if (kind == "decreasing") {
      std::reverse(w.begin(), w.end());
    }
  } else if (kind == "random") {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Symbol> dist(1, rank);
    for (Symbol& s : w) {
      s = dist(rng);
    }
  } else {
    throw std::invalid_argument(
        "--words must be 'random', 'increasing' or 'decreasing'");
  }
  return w;
}

int cmd_bench(const std::string& algorithm,
              const std::vector<std::size_t>& lengths, Symbol rank,
              std::uint64_t seed, const std::string& words) {
  if (algorithm != "right" && algorithm != "left" && algorithm != "subseq") {
    throw std::invalid_argument("--algorithm must be 'right', 'left' or 'subseq'");
  }
  std::cout << "algorithm,n,length,comparisons,seconds\n";
  for (std::size_t length : lengths) {
    const Symbol effective_rank = rank > 0 ? rank : static_cast<Symbol>(length);
    const Word w = bench_word(words, length, effective_rank, seed);
    const BasicWord<CountingSymbol> instrumented = counted_word(w);
    CountingSymbol::reset();
    const auto start = std::chrono::steady_clock::now();
    if (algorithm == "right") {
      from_word_right(instrumented, Variant::Left);
    } else if (algorithm == "left") {
      from_word_left(instrumented, Variant::Left);
    } else {
      minimal_subsequences(instrumented, Variant::Left);
    }
    const auto stop = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(stop - start).count();
    std::cout << algorithm << ',' << effective_rank << ',' << length << ','
              << CountingSymbol::comparisons << ',' << seconds << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Patience-sorting monoids: tableaux, rewriting, growth, "
               "identities and automatic structures"};
  app.require_subcommand(1);

  std::string variant = "left";
  std::string word_text;
  std::string format = "ascii";
  std::string algorithm = "right";
  Symbol rank = 0;
  bool trace = false;

  auto* tableau_cmd =
      app.add_subcommand("tableau", "Insert a word and print its tableau");
  tableau_cmd->add_option("--variant", variant, "left or right")->required();
  tableau_cmd->add_option("--word", word_text, "input word")->required();
  tableau_cmd->add_option("--rank", rank, "validate symbols against a rank");
  tableau_cmd->add_option("--algorithm", algorithm,
                          "construction path: right, left or subseq");
  tableau_cmd->add_option("--format", format, "ascii or json");

  std::string u_text;
  std::string v_text;
  auto* equiv_cmd = app.add_subcommand("equiv", "Decide the word problem");
  equiv_cmd->add_option("--variant", variant, "left or right")->required();
  equiv_cmd->add_option("--rank", rank, "bound the alphabet");
  equiv_cmd->add_option("u", u_text, "first word")->required();
  equiv_cmd->add_option("v", v_text, "second word")->required();

  auto* nf_cmd = app.add_subcommand("nf", "Rewrite a word to its normal form");
  nf_cmd->add_option("--variant", variant, "left or right")->required();
  nf_cmd->add_option("--rank", rank, "bound the alphabet");
  nf_cmd->add_option("--word", word_text, "input word")->required();
  nf_cmd->add_flag("--trace", trace, "print one line per rewrite step");

  std::size_t max_len = 8;
  std::string growth_format = "table";
  auto* growth_cmd = app.add_subcommand("growth", "Count elements by length");
  growth_cmd->add_option("--variant", variant, "left or right")->required();
  growth_cmd->add_option("--rank", rank, "generator count")->required();
  growth_cmd->add_option("--max-len", max_len, "largest length bound");
  growth_cmd->add_option("--format", growth_format, "table, json or csv");

  auto* identity_cmd = app.add_subcommand("identity", "Identity checking");
  identity_cmd->require_subcommand(1);
  std::string lhs;
  std::string rhs;
  std::size_t max_sub_len = 2;
  auto* check_cmd = identity_cmd->add_subcommand("check", "Check one identity");
  check_cmd->add_option("--variant", variant, "left or right")->required();
  check_cmd->add_option("--rank", rank, "generator count")->required();
  check_cmd->add_option("--lhs", lhs, "left side, e.g. xyxy")->required();
  check_cmd->add_option("--rhs", rhs, "right side, e.g. xyyx")->required();
  check_cmd->add_option("--max-sub-len", max_sub_len,
                        "largest substituted word length");
  std::size_t max_id_len = 4;
  auto* search_cmd =
      identity_cmd->add_subcommand("search", "Search candidate identities");
  search_cmd->add_option("--variant", variant, "left or right")->required();
  search_cmd->add_option("--rank", rank, "generator count")->required();
  search_cmd->add_option("--max-id-len", max_id_len, "largest identity length");
  search_cmd->add_option("--max-sub-len", max_sub_len,
                         "largest substituted word length");

  std::string monoid = "rps";
  std::string object = "rep";
  std::string coding = "dr";
  std::string side = "right";
  std::string automaton_format = "dot";
  auto* automaton_cmd =
      app.add_subcommand("automaton", "Export automatic-structure automata");
  automaton_cmd->add_option("--monoid", monoid, "rps or lps")->required();
  automaton_cmd->add_option("--rank", rank, "generator count")->required();
  automaton_cmd->add_option("--object", object,
                            "rep, J, multiplier:<a> or J:multiplier:<a>");
  automaton_cmd->add_option("--coding", coding, "dr or dl");
  automaton_cmd->add_option("--side", side, "right or left multiplication");
  automaton_cmd->add_option("--format", automaton_format, "dot or json");

  std::vector<std::size_t> lengths{128, 256, 512, 1024, 2048, 4096};
  std::uint64_t seed = 1;
  std::string bench_words = "random";
  auto* bench_cmd =
      app.add_subcommand("bench", "Comparison-count benchmark (CSV)");
  bench_cmd->add_option("--algorithm", algorithm, "right, left or subseq")
      ->required();
  bench_cmd->add_option("--lengths", lengths, "word lengths to measure");
  bench_cmd->add_option("--rank", rank,
                        "alphabet rank (0 = rank equals the length)");
  bench_cmd->add_option("--seed", seed, "random seed");
  bench_cmd->add_option("--words", bench_words,
                        "random, increasing or decreasing");

  try {
    app.parse(argc, argv);
    if (tableau_cmd->parsed()) {
      return cmd_tableau(variant, word_text, rank, algorithm, format);
    }
    if (equiv_cmd->parsed()) {
      return cmd_equiv(variant, rank, u_text, v_text);
    }
    if (nf_cmd->parsed()) {
      return cmd_nf(variant, rank, word_text, trace);
    }
    if (growth_cmd->parsed()) {
      return cmd_growth(variant, rank, max_len, growth_format);
    }
    if (identity_cmd->parsed()) {
      if (check_cmd->parsed()) {
        return cmd_identity_check(variant, rank, lhs, rhs, max_sub_len);
      }
      if (search_cmd->parsed()) {
        return cmd_identity_search(variant, rank, max_id_len, max_sub_len);
      }
    }
    if (automaton_cmd->parsed()) {
      return cmd_automaton(monoid, rank, object, coding, side,
                           automaton_format);
    }
    if (bench_cmd->parsed()) {
      return cmd_bench(algorithm, lengths, rank, seed, bench_words);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
