#pragma once

/**
 * @file automaton.hpp
 * @brief Weighted automata as linear representations (alpha, mu, beta).
 *
 * States are the dense integers 0..n-1. Initial and final weights are
 * vectors. Each letter's matrix mu(a) is stored row-sparse: an absent
 * entry is the semiring zero, so automata with thousands of states stay
 * cheap as long as they are sparse.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twa/errors.hpp"
#include "twa/weight.hpp"

namespace twa {

using State = std::size_t;
using Word = std::string;

template <class W>
struct Transition {
  State target;
  W weight;

  friend bool operator==(const Transition&, const Transition&) = default;
};

template <class W>
class BasicAutomaton {
 public:
  using weight_type = W;

  BasicAutomaton(SemiringTag tag, std::string alphabet, std::size_t num_states)
      : tag_(tag),
        alphabet_(std::move(alphabet)),
        initial_(num_states),
        final_(num_states),
        delta_(alphabet_.size(), std::vector<std::vector<Transition<W>>>(num_states)) {
    check_conforms(W{}, tag_);
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(alphabet_[i]);
      if (c <= ' ' || c > '~') {
        throw AlphabetError("alphabet symbols must be visible ASCII characters");
      }
      if (alphabet_.find(alphabet_[i], i + 1) != std::string::npos) {
        throw AlphabetError(std::string("duplicate alphabet symbol '") + alphabet_[i] + "'");
      }
    }
  }

  SemiringTag tag() const noexcept { return tag_; }
  const std::string& alphabet() const noexcept { return alphabet_; }
  std::size_t num_letters() const noexcept { return alphabet_.size(); }
  std::size_t num_states() const noexcept { return initial_.size(); }

  std::optional<std::size_t> letter_index(char symbol) const {
    auto pos = alphabet_.find(symbol);
    if (pos == std::string::npos) return std::nullopt;
    return pos;
  }
  std::size_t require_letter(char symbol) const {
    if (auto index = letter_index(symbol)) return *index;
    throw AlphabetError(std::string("symbol '") + symbol + "' is not in the alphabet");
  }

  const W& initial(State q) const { return initial_.at(q); }
  const W& final_weight(State q) const { return final_.at(q); }
  void set_initial(State q, W w) {
    check_conforms(w, tag_);
    initial_.at(q) = std::move(w);
  }
  void set_final(State q, W w) {
    check_conforms(w, tag_);
    final_.at(q) = std::move(w);
  }

  /// Nonzero entries of row `source` of mu(letter), sorted by target.
  std::span<const Transition<W>> transitions(std::size_t letter, State source) const {
    return delta_.at(letter).at(source);
  }

  W transition(std::size_t letter, State source, State target) const {
    const auto& row = delta_.at(letter).at(source);
    auto it = find_in_row(row, target);
    return it != row.end() && it->target == target ? it->weight : W{};
  }

  /// Sets mu(letter)[source][target]; assigning the zero removes the arc.
  void set_transition(std::size_t letter, State source, State target, W w) {
    check_conforms(w, tag_);
    if (target >= num_states()) throw DimensionError("transition target out of range");
    auto& row = delta_.at(letter).at(source);
    auto it = find_in_row(row, target);
    bool present = it != row.end() && it->target == target;
    if (w.is_zero()) {
      if (present) row.erase(it);
    } else if (present) {
      it->weight = std::move(w);
    } else {
      row.insert(it, Transition<W>{target, std::move(w)});
    }
  }

  std::size_t num_transitions() const {
    std::size_t count = 0;
    for (const auto& rows : delta_)
      for (const auto& row : rows) count += row.size();
    return count;
  }

  /// Optional provenance label of a state; empty when unset.
  const std::string& label(State q) const {
    static const std::string empty;
    return labels_.empty() ? empty : labels_.at(q);
  }
  bool has_labels() const noexcept { return !labels_.empty(); }
  void set_label(State q, std::string text) {
    if (labels_.empty()) labels_.resize(num_states());
    labels_.at(q) = std::move(text);
  }

  /// Structural equality; labels are ignored.
  friend bool operator==(const BasicAutomaton& a, const BasicAutomaton& b) {
    return a.tag_ == b.tag_ && a.alphabet_ == b.alphabet_ && a.initial_ == b.initial_ &&
           a.final_ == b.final_ && a.delta_ == b.delta_;
  }

 private:
  using Row = std::vector<Transition<W>>;
  static typename Row::iterator find_in_row(Row& row, State target) {
    return std::lower_bound(row.begin(), row.end(), target,
                            [](const Transition<W>& t, State s) { return t.target < s; });
  }
  static typename Row::const_iterator find_in_row(const Row& row, State target) {
    return std::lower_bound(row.begin(), row.end(), target,
                            [](const Transition<W>& t, State s) { return t.target < s; });
  }

  SemiringTag tag_;
  std::string alphabet_;
  std::vector<W> initial_;
  std::vector<W> final_;
  std::vector<std::vector<Row>> delta_;  // [letter][source]
  std::vector<std::string> labels_;
};

using WeightedAutomaton = BasicAutomaton<Weight>;
using PairAutomaton = BasicAutomaton<PairWeight>;

/// Support NFA: what remains of an automaton after the Boolean projection.
struct BooleanAutomaton {
  std::string alphabet;
  std::size_t num_states = 0;
  std::vector<State> initial;                     // sorted
  std::vector<State> final;                       // sorted
  std::vector<std::vector<std::vector<State>>> delta;  // [letter][source] -> sorted targets

  BooleanAutomaton() = default;
  BooleanAutomaton(std::string alphabet, std::size_t num_states);

  void add_transition(std::size_t letter, State source, State target);
  bool accepts(std::string_view word) const;
  std::size_t require_letter(char symbol) const;

  friend bool operator==(const BooleanAutomaton&, const BooleanAutomaton&) = default;
};

class TropicalMatrix;

/// alpha mu(w_1) ... mu(w_k) beta in the automaton's semiring.
template <class W>
W eval(const BasicAutomaton<W>& automaton, std::string_view word);

/// Restricts to states that are both accessible and co-accessible. Labels
/// are carried over; the relative order of surviving states is kept.
template <class W>
BasicAutomaton<W> trim(const BasicAutomaton<W>& automaton);

/// Same as trim(), also reporting the original index of every kept state.
template <class W>
BasicAutomaton<W> trim(const BasicAutomaton<W>& automaton, std::vector<State>& kept);

template <class W>
BooleanAutomaton support(const BasicAutomaton<W>& automaton);

/// Tensor product recognizing the pointwise product of the two series.
/// Both automata must carry the same scalar tag and alphabet. State
/// (p, q) is numbered p * m + q where m is b's state count.
WeightedAutomaton hadamard(const WeightedAutomaton& a, const WeightedAutomaton& b);

/// Negates every weight and swaps max-plus with min-plus.
WeightedAutomaton negate_series(const WeightedAutomaton& automaton);

/// Entrywise oplus of all letter matrices.
TropicalMatrix letter_sum(const WeightedAutomaton& automaton);

/// Same automaton with a different tag, weights unchanged.
WeightedAutomaton retag(const WeightedAutomaton& automaton, SemiringTag tag);

}  // namespace twa
