#pragma once

/**
 * @file disambiguation.hpp
 * @brief From an equivalent max-plus / min-plus pair to a 1-valued, then
 * an unambiguous, automaton.
 *
 * Pipeline:
 *  1. pair_product(A, -B) over R_max x R_max: the first coordinate
 *     recognizes S, the second S - S, i.e. 0 on the support.
 *  2. Normalize the second coordinate so all its weights are <= 0, and keep
 *     only arcs whose second coordinate is exactly 0: the result is
 *     1-valued and recognizes S.
 *  3. Take the Schutzenberger covering (product with the subset
 *     construction of the support) and break every competition by keeping
 *     a single arc: the result is unambiguous.
 */

#include <cstddef>
#include <vector>

#include "twa/automaton.hpp"
#include "twa/decisions.hpp"

namespace twa {

struct PipelineOptions {
  /// Run decide_series_equal first and refuse unequal inputs.
  bool check = true;
  std::size_t monoid_cap = 1'000'000;
  std::size_t subset_cap = 100'000;
};

/// States Q x Q' (state (p, q) numbered p * |Q'| + q). An arc exists only
/// when both underlying entries are finite; its weight is
/// (mu(a)_pr, mu(a)_pr + mu'(a)_qs).
PairAutomaton pair_product(const WeightedAutomaton& a, const WeightedAutomaton& a_prime);

/// One coordinate (1 or 2) of a pair automaton, as a max-plus automaton.
WeightedAutomaton project(const PairAutomaton& pair, int coordinate);

/// Reweights the second coordinate of a trim pair automaton by the
/// potential u = M* beta of that coordinate, leaving the first coordinate
/// untouched. Afterwards every second coordinate is <= 0. Throws
/// NotNonpositiveError when the second coordinate takes a positive value.
PairAutomaton fatou_second_coordinate(const PairAutomaton& trimmed);

/// 1-valued max-plus automaton for the common series of a max-plus `a`
/// and a min-plus `b`. Throws NotEqualError when options.check is set and
/// the series differ.
WeightedAutomaton extract_one_valued(const WeightedAutomaton& a, const WeightedAutomaton& b,
                                     const PipelineOptions& options = {});

struct Determinization {
  BooleanAutomaton dfa;
  /// subsets[i] is the set of NFA states represented by DFA state i.
  std::vector<std::vector<State>> subsets;
};

/// Accessible subset construction. The empty subset is never created, so
/// the result may be partial. Throws CapExceededError beyond `cap` subsets.
Determinization determinize(const BooleanAutomaton& nfa, std::size_t cap);

struct Covering {
  WeightedAutomaton automaton;
  /// For each covering state: (state of the input, index into subsets).
  std::vector<std::pair<State, std::size_t>> provenance;
  std::vector<std::vector<State>> subsets;
};

/// Accessible part of the product of `a` with the determinization of its
/// support.
Covering covering(const WeightedAutomaton& a, std::size_t subset_cap);

/// Keeps one arc per competition group (the one whose source has the
/// smallest input state) and one final arrow per subset, then trims.
WeightedAutomaton remove_competitions(const Covering& covering);

/// Unambiguous automaton equivalent to a 1-valued input.
WeightedAutomaton disambiguate(const WeightedAutomaton& one_valued, std::size_t subset_cap);

/// The full construction: equality check, extract_one_valued, disambiguate.
WeightedAutomaton unambiguous_from_pair(const WeightedAutomaton& a, const WeightedAutomaton& b,
                                        const PipelineOptions& options = {});

}  // namespace twa
