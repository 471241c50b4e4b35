#include "twa/disambiguation.hpp"

#include <deque>
#include <map>

namespace twa {

namespace {

std::string state_name(const WeightedAutomaton& a, State q) {
  return a.has_labels() && !a.label(q).empty() ? a.label(q) : std::to_string(q);
}

std::string subset_name(const std::vector<State>& subset) {
  std::string text = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) text += ',';
    text += std::to_string(subset[i]);
  }
  return text + "}";
}

void require_max_min(const WeightedAutomaton& a, const WeightedAutomaton& b, const char* op) {
  if (a.tag() != SemiringTag::MaxPlus || b.tag() != SemiringTag::MinPlus) {
    throw SemiringError(std::string(op) + ": expects a max-plus and a min-plus automaton");
  }
  if (a.alphabet() != b.alphabet()) throw AlphabetError(std::string(op) + ": alphabets differ");
}

}  // namespace

PairAutomaton pair_product(const WeightedAutomaton& a, const WeightedAutomaton& a_prime) {
  if (a.tag() != SemiringTag::MaxPlus || a_prime.tag() != SemiringTag::MaxPlus) {
    throw SemiringError("pair_product: expects two max-plus automata");
  }
  if (a.alphabet() != a_prime.alphabet()) throw AlphabetError("pair_product: alphabets differ");
  const std::size_t m = a_prime.num_states();
  PairAutomaton pair(SemiringTag::MaxPlusPair, a.alphabet(), a.num_states() * m);
  auto make = [](const Weight& x, const Weight& y) {
    if (x.is_zero() || y.is_zero()) return PairWeight::zero();
    return PairWeight(x.value(), Rational(x.value() + y.value()));
  };
  for (State p = 0; p < a.num_states(); ++p) {
    for (State q = 0; q < m; ++q) {
      State pq = p * m + q;
      pair.set_label(pq, "(" + state_name(a, p) + "," + state_name(a_prime, q) + ")");
      pair.set_initial(pq, make(a.initial(p), a_prime.initial(q)));
      pair.set_final(pq, make(a.final_weight(p), a_prime.final_weight(q)));
    }
    for (std::size_t l = 0; l < a.num_letters(); ++l)
      for (const auto& ta : a.transitions(l, p))
        for (State q = 0; q < m; ++q)
          for (const auto& tb : a_prime.transitions(l, q))
            pair.set_transition(l, p * m + q, ta.target * m + tb.target, make(ta.weight, tb.weight));
  }
  return pair;
}

WeightedAutomaton project(const PairAutomaton& pair, int coordinate) {
  if (coordinate != 1 && coordinate != 2) throw std::invalid_argument("coordinate must be 1 or 2");
  auto pick = [&](const PairWeight& w) { return coordinate == 1 ? w.first() : w.second(); };
  WeightedAutomaton result(SemiringTag::MaxPlus, pair.alphabet(), pair.num_states());
  for (State q = 0; q < pair.num_states(); ++q) {
    if (pair.has_labels()) result.set_label(q, pair.label(q));
    result.set_initial(q, pick(pair.initial(q)));
    result.set_final(q, pick(pair.final_weight(q)));
    for (std::size_t l = 0; l < pair.num_letters(); ++l)
      for (const auto& t : pair.transitions(l, q)) result.set_transition(l, q, t.target, pick(t.weight));
  }
  return result;
}

PairAutomaton fatou_second_coordinate(const PairAutomaton& trimmed) {
  std::vector<Rational> u = fatou_potential(project(trimmed, 2));
  PairAutomaton result(SemiringTag::MaxPlusPair, trimmed.alphabet(), trimmed.num_states());
  auto shifted = [](const PairWeight& w, const Rational& delta) {
    return PairWeight(w.first().value(), Rational(w.second().value() + delta));
  };
  for (State q = 0; q < trimmed.num_states(); ++q) {
    if (trimmed.has_labels()) result.set_label(q, trimmed.label(q));
    if (!trimmed.initial(q).is_zero()) result.set_initial(q, shifted(trimmed.initial(q), u[q]));
    if (!trimmed.final_weight(q).is_zero()) {
      result.set_final(q, shifted(trimmed.final_weight(q), Rational(-u[q])));
    }
    for (std::size_t l = 0; l < trimmed.num_letters(); ++l)
      for (const auto& t : trimmed.transitions(l, q))
        result.set_transition(l, q, t.target, shifted(t.weight, Rational(u[t.target] - u[q])));
  }
  return result;
}

WeightedAutomaton extract_one_valued(const WeightedAutomaton& a, const WeightedAutomaton& b,
                                     const PipelineOptions& options) {
  require_max_min(a, b, "extract_one_valued");
  if (options.check) {
    Verdict v = decide_series_equal(a, b, DecisionOptions{options.monoid_cap});
    if (!v) throw NotEqualError("the max-plus and min-plus series differ", *v.witness);
  }
  PairAutomaton pair = [&] {
    try {
      return fatou_second_coordinate(trim(pair_product(trim(a), negate_series(trim(b)))));
    } catch (const NotNonpositiveError& e) {
      throw NotEqualError("the max-plus and min-plus series differ", e.witness());
    }
  }();

  // Keep the arcs whose reweighted second coordinate is exactly 0.
  WeightedAutomaton filtered(SemiringTag::MaxPlus, pair.alphabet(), pair.num_states());
  for (State q = 0; q < pair.num_states(); ++q) {
    if (pair.has_labels()) filtered.set_label(q, pair.label(q));
    const PairWeight& in = pair.initial(q);
    if (!in.is_zero() && sgn(in.second().value()) == 0) filtered.set_initial(q, in.first());
    const PairWeight& out = pair.final_weight(q);
    if (!out.is_zero() && sgn(out.second().value()) == 0) filtered.set_final(q, out.first());
    for (std::size_t l = 0; l < pair.num_letters(); ++l) {
      for (const auto& t : pair.transitions(l, q)) {
        if (sgn(t.weight.second().value()) == 0) filtered.set_transition(l, q, t.target, t.weight.first());
      }
    }
  }
  return trim(filtered);
}

Determinization determinize(const BooleanAutomaton& nfa, std::size_t cap) {
  Determinization result;
  result.dfa = BooleanAutomaton(nfa.alphabet, 0);
  if (nfa.initial.empty()) return result;
  std::map<std::vector<State>, std::size_t> index;
  std::vector<std::vector<std::size_t>> edges;  // [subset][letter] -> subset or npos
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  auto intern = [&](std::vector<State> subset) {
    auto it = index.find(subset);
    if (it != index.end()) return it->second;
    if (result.subsets.size() >= cap) throw CapExceededError("subset construction too large", cap);
    std::size_t id = result.subsets.size();
    index.emplace(subset, id);
    result.subsets.push_back(std::move(subset));
    edges.emplace_back(nfa.alphabet.size(), none);
    return id;
  };
  intern(nfa.initial);
  for (std::size_t i = 0; i < result.subsets.size(); ++i) {
    for (std::size_t l = 0; l < nfa.alphabet.size(); ++l) {
      std::vector<bool> mark(nfa.num_states, false);
      for (State p : result.subsets[i])
        for (State q : nfa.delta[l][p]) mark[q] = true;
      std::vector<State> next;
      for (State q = 0; q < nfa.num_states; ++q)
        if (mark[q]) next.push_back(q);
      if (next.empty()) continue;
      std::size_t target = intern(std::move(next));
      edges[i][l] = target;
    }
  }
  BooleanAutomaton dfa(nfa.alphabet, result.subsets.size());
  dfa.initial.push_back(0);
  for (std::size_t i = 0; i < result.subsets.size(); ++i) {
    const auto& s = result.subsets[i];
    bool is_final = false;
    for (State q : nfa.final) is_final |= std::binary_search(s.begin(), s.end(), q);
    if (is_final) dfa.final.push_back(i);
    for (std::size_t l = 0; l < nfa.alphabet.size(); ++l)
      if (edges[i][l] != none) dfa.add_transition(l, i, edges[i][l]);
  }
  result.dfa = std::move(dfa);
  return result;
}

Covering covering(const WeightedAutomaton& a, std::size_t subset_cap) {
  if (a.tag() != SemiringTag::MaxPlus && a.tag() != SemiringTag::MinPlus) {
    throw SemiringError("covering: needs a max-plus or min-plus automaton");
  }
  Determinization d = determinize(support(a), subset_cap);

  std::map<std::pair<State, std::size_t>, State> index;
  std::vector<std::pair<State, std::size_t>> states;
  auto intern = [&](State p, std::size_t subset) {
    auto key = std::make_pair(p, subset);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    State id = states.size();
    index.emplace(key, id);
    states.push_back(key);
    return id;
  };
  struct Arc {
    std::size_t letter;
    State source;
    State target;
    Weight weight;
  };
  std::vector<Arc> arcs;
  if (!d.subsets.empty()) {
    for (State p : d.subsets[0]) intern(p, 0);
  }
  for (State s = 0; s < states.size(); ++s) {
    auto [p, subset] = states[s];
    for (std::size_t l = 0; l < a.num_letters(); ++l) {
      const auto& next = d.dfa.delta[l][subset];
      if (next.empty()) continue;
      for (const auto& t : a.transitions(l, p)) {
        arcs.push_back({l, s, intern(t.target, next.front()), t.weight});
      }
    }
  }

  Covering result{WeightedAutomaton(a.tag(), a.alphabet(), states.size()), states, d.subsets};
  WeightedAutomaton& c = result.automaton;
  for (State s = 0; s < states.size(); ++s) {
    auto [p, subset] = states[s];
    c.set_label(s, "(" + state_name(a, p) + "," + subset_name(d.subsets[subset]) + ")");
    if (subset == 0) c.set_initial(s, a.initial(p));
    c.set_final(s, a.final_weight(p));
  }
  for (auto& arc : arcs) c.set_transition(arc.letter, arc.source, arc.target, std::move(arc.weight));
  return result;
}

WeightedAutomaton remove_competitions(const Covering& cover) {
  const WeightedAutomaton& c = cover.automaton;
  const auto& prov = cover.provenance;
  WeightedAutomaton result(c.tag(), c.alphabet(), c.num_states());

  // (b) one final arrow per subset.
  std::map<std::size_t, State> final_keeper;
  for (State s = 0; s < c.num_states(); ++s) {
    if (c.final_weight(s).is_zero()) continue;
    auto [it, inserted] = final_keeper.emplace(prov[s].second, s);
    if (!inserted && prov[s].first < prov[it->second].first) it->second = s;
  }
  // (a) one arc per (letter, target, source subset).
  std::map<std::tuple<std::size_t, State, std::size_t>, State> arc_keeper;
  for (State s = 0; s < c.num_states(); ++s) {
    for (std::size_t l = 0; l < c.num_letters(); ++l) {
      for (const auto& t : c.transitions(l, s)) {
        auto [it, inserted] = arc_keeper.emplace(std::make_tuple(l, t.target, prov[s].second), s);
        if (!inserted && prov[s].first < prov[it->second].first) it->second = s;
      }
    }
  }

  for (State s = 0; s < c.num_states(); ++s) {
    if (c.has_labels()) result.set_label(s, c.label(s));
    result.set_initial(s, c.initial(s));
    auto keeper = final_keeper.find(prov[s].second);
    if (keeper != final_keeper.end() && keeper->second == s) result.set_final(s, c.final_weight(s));
    for (std::size_t l = 0; l < c.num_letters(); ++l) {
      for (const auto& t : c.transitions(l, s)) {
        if (arc_keeper.at(std::make_tuple(l, t.target, prov[s].second)) == s) {
          result.set_transition(l, s, t.target, t.weight);
        }
      }
    }
  }
  return trim(result);
}

WeightedAutomaton disambiguate(const WeightedAutomaton& one_valued, std::size_t subset_cap) {
  return remove_competitions(covering(trim(one_valued), subset_cap));
}

WeightedAutomaton unambiguous_from_pair(const WeightedAutomaton& a, const WeightedAutomaton& b,
                                        const PipelineOptions& options) {
  WeightedAutomaton one_valued = extract_one_valued(a, b, options);
  return disambiguate(one_valued, options.subset_cap);
}

}  // namespace twa
