#pragma once

/**
 * @file decisions.hpp
 * @brief Decision procedures on max-plus series.
 *
 * Every entry point trims its input first, so user automata need not be
 * trim. Negative verdicts come with a witness word that can be checked
 * independently by evaluating the automata on it.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "twa/automaton.hpp"
#include "twa/boolean.hpp"

namespace twa {

struct Verdict {
  bool holds = false;
  /// Set whenever `holds` is false.
  std::optional<Word> witness;

  explicit operator bool() const noexcept { return holds; }
  static Verdict yes() { return Verdict{true, std::nullopt}; }
  static Verdict no(Word witness) { return Verdict{false, std::move(witness)}; }
};

struct DecisionOptions {
  std::size_t monoid_cap = 1'000'000;
};

/// Is <S,w> <= 0 for every word? Checks alpha M^k beta <= 0 for k < |Q|
/// first (shortest witnesses), then rho(M) <= 0. Max-plus only.
Verdict decide_nonpositive(const WeightedAutomaton& automaton);

/// The potential u = M* beta of a trim max-plus automaton whose series is
/// nonpositive. Throws NotNonpositiveError otherwise.
std::vector<Rational> fatou_potential(const WeightedAutomaton& trimmed);

/// Conjugates a nonpositive series by diag(M* beta) so that every weight of
/// the result is <= 0. The input is trimmed first; the result has the same
/// number of states as the trimmed input.
WeightedAutomaton fatou_normalize(const WeightedAutomaton& automaton);

struct MonoidElement {
  BoolMatrix matrix;
  Word word;  // a shortest word w with mu(w) = matrix
};

/// The transition monoid {mu(w)} of a Boolean automaton, identity first,
/// in breadth-first order. Throws CapExceededError beyond `cap` elements.
std::vector<MonoidElement> boolean_monoid_closure(const BooleanAutomaton& nfa, std::size_t cap);

/// Is <S,w> = c for every word (in particular every word is in the support)?
Verdict decide_equal_const(const WeightedAutomaton& automaton, const Rational& c,
                           const DecisionOptions& options = {});

/// Is <S,w> = c for every w in supp S?
Verdict decide_equal_const_on_support(const WeightedAutomaton& automaton, const Rational& c,
                                      const DecisionOptions& options = {});

/// Language equality; the witness is accepted by exactly one of the two.
Verdict nfa_equivalence(const BooleanAutomaton& a, const BooleanAutomaton& b);

/// L(a) included in L(b); the witness is accepted by a but not by b.
Verdict nfa_inclusion(const BooleanAutomaton& a, const BooleanAutomaton& b);

/// Equality of a max-plus series with a min-plus series: same support and
/// same values on it.
Verdict decide_series_equal(const WeightedAutomaton& max_plus, const WeightedAutomaton& min_plus,
                            const DecisionOptions& options = {});

/// supp S included in supp T and <S,w> <= <T,w> on supp S.
Verdict decide_series_leq(const WeightedAutomaton& max_plus, const WeightedAutomaton& min_plus);

/// Adds `delta` to every finite final weight, shifting the series by delta.
WeightedAutomaton shift_series(const WeightedAutomaton& automaton, const Rational& delta);

}  // namespace twa
