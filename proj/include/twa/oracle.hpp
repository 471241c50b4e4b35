#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force ground truth.
 *
 * Nothing here shares code with the algebraic routines it is used to
 * check: series values come from explicit path enumeration and circuit
 * means from exhaustive circuit enumeration. Everything is exponential.
 */

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "twa/automaton.hpp"
#include "twa/spectral.hpp"

namespace twa::oracle {

struct Path {
  std::vector<State> states;  // |w| + 1 states
  Weight weight;              // initial + arcs + final, as rationals
};

/// All successful paths labeled `word`.
std::vector<Path> enum_paths(const WeightedAutomaton& automaton, std::string_view word);

Weight eval_bruteforce(const WeightedAutomaton& automaton, std::string_view word);

/// Number of successful paths labeled `word`.
std::size_t ambiguity(const WeightedAutomaton& automaton, std::string_view word);

/// Calls `visit` on every word of length <= max_length in length-lex
/// order; stops early when `visit` returns false. Throws
/// BoundExceededError when more than 10^7 words would be produced.
void for_each_word(std::string_view alphabet, std::size_t max_length,
                   const std::function<bool(const Word&)>& visit);

struct Finding {
  bool holds = true;
  std::optional<Word> witness;  // first counterexample in length-lex order
};

/// Compares values word by word (two zeros compare equal, whatever the tags).
Finding equal_upto(const WeightedAutomaton& a, const WeightedAutomaton& b, std::size_t max_length);

/// Do all successful paths of each word share one weight?
Finding one_valued_upto(const WeightedAutomaton& a, std::size_t max_length);

/// At most one successful path per word?
Finding unambiguous_upto(const WeightedAutomaton& a, std::size_t max_length);

/// Largest path count over words of length <= max_length, with the first
/// word attaining it.
std::pair<std::size_t, Word> max_ambiguity(const WeightedAutomaton& a, std::size_t max_length);

struct SimpleCircuit {
  std::vector<std::size_t> vertices;  // smallest vertex first
  Rational mean;
};

/// Every simple circuit of the graph of a max-plus matrix.
std::vector<SimpleCircuit> simple_circuits(const TropicalMatrix& m);

}  // namespace twa::oracle
