#include "twa/automaton.hpp"

#include <deque>

#include "twa/spectral.hpp"

namespace twa {

template <class W>
W eval(const BasicAutomaton<W>& automaton, std::string_view word) {
  const std::size_t n = automaton.num_states();
  const SemiringTag tag = automaton.tag();
  std::vector<W> row(n);
  for (State q = 0; q < n; ++q) row[q] = automaton.initial(q);
  for (char symbol : word) {
    std::size_t letter = automaton.require_letter(symbol);
    std::vector<W> next(n);
    for (State p = 0; p < n; ++p) {
      if (row[p].is_zero()) continue;
      for (const auto& t : automaton.transitions(letter, p)) {
        next[t.target] = oplus(next[t.target], otimes(row[p], t.weight, tag), tag);
      }
    }
    row = std::move(next);
  }
  W result{};
  for (State q = 0; q < n; ++q) {
    if (row[q].is_zero()) continue;
    result = oplus(result, otimes(row[q], automaton.final_weight(q), tag), tag);
  }
  return result;
}

namespace {

template <class W>
std::vector<bool> accessible(const BasicAutomaton<W>& a) {
  std::vector<bool> seen(a.num_states(), false);
  std::deque<State> queue;
  for (State q = 0; q < a.num_states(); ++q) {
    if (!a.initial(q).is_zero()) {
      seen[q] = true;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    State p = queue.front();
    queue.pop_front();
    for (std::size_t l = 0; l < a.num_letters(); ++l) {
      for (const auto& t : a.transitions(l, p)) {
        if (!seen[t.target]) {
          seen[t.target] = true;
          queue.push_back(t.target);
        }
      }
    }
  }
  return seen;
}

// Backward search restricted to `allowed` states.
template <class W>
std::vector<bool> coaccessible(const BasicAutomaton<W>& a, const std::vector<bool>& allowed) {
  const std::size_t n = a.num_states();
  std::vector<std::vector<State>> predecessors(n);
  for (std::size_t l = 0; l < a.num_letters(); ++l)
    for (State p = 0; p < n; ++p)
      if (allowed[p])
        for (const auto& t : a.transitions(l, p))
          if (allowed[t.target]) predecessors[t.target].push_back(p);
  std::vector<bool> seen(n, false);
  std::deque<State> queue;
  for (State q = 0; q < n; ++q) {
    if (allowed[q] && !a.final_weight(q).is_zero()) {
      seen[q] = true;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (State p : predecessors[q]) {
      if (!seen[p]) {
        seen[p] = true;
        queue.push_back(p);
      }
    }
  }
  return seen;
}

}  // namespace

template <class W>
BasicAutomaton<W> trim(const BasicAutomaton<W>& automaton, std::vector<State>& kept) {
  const std::size_t n = automaton.num_states();
  auto useful = coaccessible(automaton, accessible(automaton));
  kept.clear();
  std::vector<State> renumber(n, n);
  for (State q = 0; q < n; ++q) {
    if (useful[q]) {
      renumber[q] = kept.size();
      kept.push_back(q);
    }
  }
  BasicAutomaton<W> result(automaton.tag(), automaton.alphabet(), kept.size());
  for (State q : kept) {
    State r = renumber[q];
    result.set_initial(r, automaton.initial(q));
    result.set_final(r, automaton.final_weight(q));
    if (automaton.has_labels()) result.set_label(r, automaton.label(q));
    for (std::size_t l = 0; l < automaton.num_letters(); ++l) {
      for (const auto& t : automaton.transitions(l, q)) {
        if (useful[t.target]) result.set_transition(l, r, renumber[t.target], t.weight);
      }
    }
  }
  return result;
}

template <class W>
BasicAutomaton<W> trim(const BasicAutomaton<W>& automaton) {
  std::vector<State> kept;
  return trim(automaton, kept);
}

template <class W>
BooleanAutomaton support(const BasicAutomaton<W>& automaton) {
  BooleanAutomaton nfa(automaton.alphabet(), automaton.num_states());
  for (State q = 0; q < automaton.num_states(); ++q) {
    if (!automaton.initial(q).is_zero()) nfa.initial.push_back(q);
    if (!automaton.final_weight(q).is_zero()) nfa.final.push_back(q);
    for (std::size_t l = 0; l < automaton.num_letters(); ++l)
      for (const auto& t : automaton.transitions(l, q)) nfa.delta[l][q].push_back(t.target);
  }
  return nfa;
}

template Weight eval(const WeightedAutomaton&, std::string_view);
template PairWeight eval(const PairAutomaton&, std::string_view);
template WeightedAutomaton trim(const WeightedAutomaton&);
template PairAutomaton trim(const PairAutomaton&);
template WeightedAutomaton trim(const WeightedAutomaton&, std::vector<State>&);
template PairAutomaton trim(const PairAutomaton&, std::vector<State>&);
template BooleanAutomaton support(const WeightedAutomaton&);
template BooleanAutomaton support(const PairAutomaton&);

namespace {

void require_same_shape(const WeightedAutomaton& a, const WeightedAutomaton& b, const char* op) {
  if (a.tag() != b.tag()) throw SemiringError(std::string(op) + ": semiring tags differ");
  if (a.tag() != SemiringTag::MaxPlus && a.tag() != SemiringTag::MinPlus) {
    throw SemiringError(std::string(op) + ": needs max-plus or min-plus automata");
  }
  if (a.alphabet() != b.alphabet()) throw AlphabetError(std::string(op) + ": alphabets differ");
}

}  // namespace

WeightedAutomaton hadamard(const WeightedAutomaton& a, const WeightedAutomaton& b) {
  require_same_shape(a, b, "hadamard");
  const std::size_t m = b.num_states();
  const SemiringTag tag = a.tag();
  WeightedAutomaton h(tag, a.alphabet(), a.num_states() * m);
  for (State p = 0; p < a.num_states(); ++p) {
    for (State q = 0; q < m; ++q) {
      State pq = p * m + q;
      h.set_initial(pq, otimes(a.initial(p), b.initial(q), tag));
      h.set_final(pq, otimes(a.final_weight(p), b.final_weight(q), tag));
    }
    for (std::size_t l = 0; l < a.num_letters(); ++l) {
      for (const auto& ta : a.transitions(l, p)) {
        for (State q = 0; q < m; ++q) {
          for (const auto& tb : b.transitions(l, q)) {
            h.set_transition(l, p * m + q, ta.target * m + tb.target,
                             otimes(ta.weight, tb.weight, tag));
          }
        }
      }
    }
  }
  return h;
}

WeightedAutomaton negate_series(const WeightedAutomaton& automaton) {
  SemiringTag flipped;
  switch (automaton.tag()) {
    case SemiringTag::MaxPlus: flipped = SemiringTag::MinPlus; break;
    case SemiringTag::MinPlus: flipped = SemiringTag::MaxPlus; break;
    default: throw SemiringError("negate_series: needs max-plus or min-plus");
  }
  WeightedAutomaton result(flipped, automaton.alphabet(), automaton.num_states());
  for (State q = 0; q < automaton.num_states(); ++q) {
    result.set_initial(q, negate_weight(automaton.initial(q)));
    result.set_final(q, negate_weight(automaton.final_weight(q)));
    if (automaton.has_labels()) result.set_label(q, automaton.label(q));
    for (std::size_t l = 0; l < automaton.num_letters(); ++l)
      for (const auto& t : automaton.transitions(l, q))
        result.set_transition(l, q, t.target, negate_weight(t.weight));
  }
  return result;
}

TropicalMatrix letter_sum(const WeightedAutomaton& automaton) {
  const SemiringTag tag = automaton.tag();
  if (tag != SemiringTag::MaxPlus && tag != SemiringTag::MinPlus) {
    throw SemiringError("letter_sum: needs max-plus or min-plus");
  }
  TropicalMatrix m(automaton.num_states(), tag);
  for (std::size_t l = 0; l < automaton.num_letters(); ++l)
    for (State p = 0; p < automaton.num_states(); ++p)
      for (const auto& t : automaton.transitions(l, p))
        m.set(p, t.target, oplus(m(p, t.target), t.weight, tag));
  return m;
}

WeightedAutomaton retag(const WeightedAutomaton& automaton, SemiringTag tag) {
  WeightedAutomaton result(tag, automaton.alphabet(), automaton.num_states());
  for (State q = 0; q < automaton.num_states(); ++q) {
    result.set_initial(q, automaton.initial(q));
    result.set_final(q, automaton.final_weight(q));
    if (automaton.has_labels()) result.set_label(q, automaton.label(q));
    for (std::size_t l = 0; l < automaton.num_letters(); ++l)
      for (const auto& t : automaton.transitions(l, q)) result.set_transition(l, q, t.target, t.weight);
  }
  return result;
}

}  // namespace twa
