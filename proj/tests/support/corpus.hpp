#pragma once

// Hand-built automata and generators shared by the unit and acceptance
// suites.

#include <optional>
#include <random>
#include <string>

#include "twa/automaton.hpp"
#include "twa/spectral.hpp"

namespace twa::testing {

std::string data_path(const std::string& name);
WeightedAutomaton load_data(const std::string& name);
PairAutomaton load_pair_data(const std::string& name);

// One-letter example built from four distinct primes p < q and r < s:
// T1 = max(S_p, S_q), T2 = min(S_r, S_s), T = T1 + T2, where S_i is i on
// the multiples of i and undefined elsewhere.
struct PrimeSeries {
  int p, q, r, s;

  /// Closed form of T(a^n); nullopt outside the support.
  std::optional<long> value(long n) const;

  /// (p + q) r s states: cycles for S_p and S_q, times a deterministic
  /// counter modulo r s for T2.
  WeightedAutomaton max_plus() const;
  /// p q (r + s) states: a deterministic counter modulo p q for T1, times
  /// cycles for S_r and S_s.
  WeightedAutomaton min_plus() const;
};

/// Two disjoint cycles of lengths i and j on letter a, each entered and
/// left at its first state with final weights i and j.
WeightedAutomaton two_cycles(int i, int j, SemiringTag tag);

/// Deterministic counter modulo `period` whose final weight at k is
/// `combine` over the members of {i, j} dividing k.
WeightedAutomaton residue_counter(int i, int j, bool take_max, SemiringTag tag);

struct RandomShape {
  std::size_t min_states = 1;
  std::size_t max_states = 4;
  std::string alphabet = "ab";
  double density = 0.35;
  int low = -3;
  int high = 3;
  bool fractions = false;
  SemiringTag tag = SemiringTag::MaxPlus;
};

Rational random_rational(std::mt19937& rng, int low, int high, bool fractions);
WeightedAutomaton random_automaton(std::mt19937& rng, const RandomShape& shape);
/// Single initial state, at most one arc per (state, letter).
WeightedAutomaton random_deterministic(std::mt19937& rng, const RandomShape& shape);
/// Support NFA with all weights 0 and a universal state, so its product
/// with anything keeps the support and the values.
WeightedAutomaton random_zero_cover(std::mt19937& rng, const RandomShape& shape);
/// Diagonal conjugation by a random potential; same series.
WeightedAutomaton random_conjugate(std::mt19937& rng, const WeightedAutomaton& a);
/// A 1-valued (usually ambiguous) max-plus automaton: a random
/// deterministic series times a random zero cover, randomly reweighted.
WeightedAutomaton one_valued_from(std::mt19937& rng, const WeightedAutomaton& deterministic,
                                  const RandomShape& shape);

TropicalMatrix random_matrix(std::mt19937& rng, std::size_t n, int low, int high, double zero_rate);

/// Brute-force isomorphism test (state counts up to 8).
template <class W>
bool isomorphic(const BasicAutomaton<W>& a, const BasicAutomaton<W>& b);

}  // namespace twa::testing
