#include "twa/decisions.hpp"

#include <deque>
#include <map>
#include <unordered_map>
#include <variant>

#include "twa/spectral.hpp"

namespace twa {

namespace {

void require_max_plus(const WeightedAutomaton& a, const char* op) {
  if (a.tag() != SemiringTag::MaxPlus) {
    throw SemiringError(std::string(op) + ": needs a max-plus automaton");
  }
}

// Sparse M = (+)_a mu(a), remembering for every entry the first letter
// that attains the maximum so that paths in M can be spelled as words.
struct LetterSum {
  struct Entry {
    State target;
    Rational weight;
    std::size_t letter;
  };
  std::vector<std::vector<Entry>> out;

  explicit LetterSum(const WeightedAutomaton& a) : out(a.num_states()) {
    for (State p = 0; p < a.num_states(); ++p) {
      std::map<State, Entry> best;
      for (std::size_t l = 0; l < a.num_letters(); ++l) {
        for (const auto& t : a.transitions(l, p)) {
          auto it = best.find(t.target);
          if (it == best.end()) {
            best.emplace(t.target, Entry{t.target, t.weight.value(), l});
          } else if (t.weight.value() > it->second.weight) {
            it->second.weight = t.weight.value();
            it->second.letter = l;
          }
        }
      }
      for (auto& [target, entry] : best) out[p].push_back(std::move(entry));
    }
  }

  ArcGraph graph() const {
    ArcGraph g(out.size());
    for (State p = 0; p < out.size(); ++p)
      for (const auto& e : out[p]) g.add_arc(p, e.target, e.weight);
    return g;
  }

  const Entry& entry(State p, State q) const {
    for (const auto& e : out[p])
      if (e.target == q) return e;
    throw std::logic_error("letter sum: missing entry");
  }
};

std::vector<Weight> times_sum(const std::vector<Weight>& v, const LetterSum& m) {
  std::vector<Weight> next(v.size());
  for (State p = 0; p < v.size(); ++p) {
    if (v[p].is_zero()) continue;
    for (const auto& e : m.out[p]) {
      Rational candidate = v[p].value() + e.weight;
      if (next[e.target].is_zero() || candidate > next[e.target].value()) {
        next[e.target] = Weight(candidate);
      }
    }
  }
  return next;
}

// Largest alpha M^k beta, or zero.
Weight row_times_final(const std::vector<Weight>& v, const WeightedAutomaton& a) {
  Weight best;
  for (State q = 0; q < v.size(); ++q) {
    best = oplus(best, otimes(v[q], a.final_weight(q), SemiringTag::MaxPlus), SemiringTag::MaxPlus);
  }
  return best;
}

// Spells a word of length k whose best path has weight alpha M^k beta > 0.
Word eq1_witness(const WeightedAutomaton& a, const LetterSum& m, std::size_t k) {
  std::vector<std::vector<Weight>> history;
  std::vector<Weight> v(a.num_states());
  for (State q = 0; q < a.num_states(); ++q) v[q] = a.initial(q);
  history.push_back(v);
  for (std::size_t j = 0; j < k; ++j) history.push_back(v = times_sum(v, m));

  const std::size_t n = a.num_states();
  std::vector<std::vector<State>> predecessors(n);
  for (State p = 0; p < n; ++p)
    for (const auto& e : m.out[p]) predecessors[e.target].push_back(p);

  State current = n;
  for (State q = 0; q < n && current == n; ++q) {
    if (is_positive(otimes(history[k][q], a.final_weight(q), SemiringTag::MaxPlus))) current = q;
  }
  Word reversed;
  for (std::size_t j = k; j > 0; --j) {
    const Rational& target_value = history[j][current].value();
    State previous = n;
    for (State p : predecessors[current]) {
      if (history[j - 1][p].is_zero()) continue;
      if (history[j - 1][p].value() + m.entry(p, current).weight == target_value) {
        previous = p;
        break;
      }
    }
    if (previous == n) throw std::logic_error("eq1 witness: broken backtrack");
    reversed.push_back(a.alphabet()[m.entry(previous, current).letter]);
    current = previous;
  }
  return Word(reversed.rbegin(), reversed.rend());
}

// Shortest path in the letter-sum graph from any of `sources` to any state
// satisfying `is_goal`; returns (word, total arc weight, endpoints).
struct Route {
  Word word;
  Rational weight;
  State from;
  State to;
};

template <class Goal>
Route bfs_route(const WeightedAutomaton& a, const LetterSum& m, const std::vector<State>& sources,
                Goal is_goal) {
  const std::size_t n = a.num_states();
  std::vector<State> parent(n, n);
  std::vector<bool> seen(n, false);
  std::deque<State> queue;
  for (State s : sources) {
    seen[s] = true;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    State p = queue.front();
    queue.pop_front();
    if (is_goal(p)) {
      Route route{{}, 0, p, p};
      State q = p;
      while (parent[q] != n) {
        const auto& e = m.entry(parent[q], q);
        route.word.push_back(a.alphabet()[e.letter]);
        route.weight += e.weight;
        q = parent[q];
      }
      route.from = q;
      route.word = Word(route.word.rbegin(), route.word.rend());
      return route;
    }
    for (const auto& e : m.out[p]) {
      if (!seen[e.target]) {
        seen[e.target] = true;
        parent[e.target] = p;
        queue.push_back(e.target);
      }
    }
  }
  throw std::logic_error("bfs_route: automaton is not trim");
}

// w1 c^N w2 where c spells a positive circuit through `circuit.vertices[0]`.
Word pumped_witness(const WeightedAutomaton& a, const LetterSum& m, const Circuit& circuit) {
  const State pivot = circuit.vertices.front();
  std::vector<State> initials;
  for (State q = 0; q < a.num_states(); ++q)
    if (!a.initial(q).is_zero()) initials.push_back(q);
  Route access = bfs_route(a, m, initials, [&](State q) { return q == pivot; });
  Route coaccess =
      bfs_route(a, m, {pivot}, [&](State q) { return !a.final_weight(q).is_zero(); });

  Word loop;
  Rational loop_weight = 0;
  for (std::size_t i = 0; i < circuit.vertices.size(); ++i) {
    const auto& e = m.entry(circuit.vertices[i],
                            circuit.vertices[(i + 1) % circuit.vertices.size()]);
    loop.push_back(a.alphabet()[e.letter]);
    loop_weight += e.weight;
  }
  Rational ends = a.initial(access.from).value() + access.weight + coaccess.weight +
                  a.final_weight(coaccess.to).value();
  mpz_class repeats = 0;
  if (ends <= 0) {
    Rational ratio = -ends / loop_weight;
    mpz_fdiv_q(repeats.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
    repeats += 1;
  }
  Word word = access.word;
  for (mpz_class i = 0; i < repeats; ++i) word += loop;
  return word + coaccess.word;
}

Verdict nonpositive_trimmed(const WeightedAutomaton& t) {
  const std::size_t n = t.num_states();
  if (n == 0) return Verdict::yes();
  LetterSum m(t);
  std::vector<Weight> v(n);
  for (State q = 0; q < n; ++q) v[q] = t.initial(q);
  for (std::size_t k = 0; k < n; ++k) {
    if (is_positive(row_times_final(v, t))) return Verdict::no(eq1_witness(t, m, k));
    if (k + 1 < n) v = times_sum(v, m);
  }
  auto circuit = critical_circuit(m.graph());
  if (circuit && sgn(circuit->mean) > 0) return Verdict::no(pumped_witness(t, m, *circuit));
  return Verdict::yes();
}

WeightedAutomaton conjugate(const WeightedAutomaton& t, const std::vector<Rational>& u) {
  WeightedAutomaton result(t.tag(), t.alphabet(), t.num_states());
  for (State q = 0; q < t.num_states(); ++q) {
    if (t.has_labels()) result.set_label(q, t.label(q));
    if (t.initial(q).is_finite()) result.set_initial(q, Weight(Rational(t.initial(q).value() + u[q])));
    if (t.final_weight(q).is_finite()) {
      result.set_final(q, Weight(Rational(t.final_weight(q).value() - u[q])));
    }
    for (std::size_t l = 0; l < t.num_letters(); ++l)
      for (const auto& tr : t.transitions(l, q))
        result.set_transition(l, q, tr.target,
                              Weight(Rational(tr.weight.value() - u[q] + u[tr.target])));
  }
  return result;
}

std::vector<Rational> potential_unchecked(const WeightedAutomaton& t) {
  std::vector<Weight> beta(t.num_states());
  for (State q = 0; q < t.num_states(); ++q) beta[q] = t.final_weight(q);
  auto u = star_times_vector(LetterSum(t).graph(), beta);
  std::vector<Rational> values;
  values.reserve(u.size());
  for (const auto& w : u) {
    if (w.is_zero()) throw std::logic_error("fatou potential: state is not co-accessible");
    values.push_back(w.value());
  }
  return values;
}

// Boolean triple keeping exactly the entries equal to the rational 0.
BooleanAutomaton zero_filter(const WeightedAutomaton& a) {
  BooleanAutomaton nfa(a.alphabet(), a.num_states());
  for (State q = 0; q < a.num_states(); ++q) {
    if (is_exactly_zero_rational(a.initial(q))) nfa.initial.push_back(q);
    if (is_exactly_zero_rational(a.final_weight(q))) nfa.final.push_back(q);
    for (std::size_t l = 0; l < a.num_letters(); ++l)
      for (const auto& t : a.transitions(l, q))
        if (is_exactly_zero_rational(t.weight)) nfa.delta[l][q].push_back(t.target);
  }
  return nfa;
}

// Trims, shifts by -c, and normalizes. Returns a negative verdict instead
// when the shifted series takes a positive value.
struct Normalized {
  WeightedAutomaton shifted;
  WeightedAutomaton normalized;
};

std::variant<Verdict, Normalized> shift_and_normalize(const WeightedAutomaton& a, const Rational& c) {
  require_max_plus(a, "equal-const");
  WeightedAutomaton shifted = shift_series(trim(a), Rational(-c));
  Verdict v = nonpositive_trimmed(shifted);
  if (!v) return v;
  WeightedAutomaton normalized = conjugate(shifted, potential_unchecked(shifted));
  return Normalized{std::move(shifted), std::move(normalized)};
}

}  // namespace

Verdict decide_nonpositive(const WeightedAutomaton& automaton) {
  require_max_plus(automaton, "decide_nonpositive");
  return nonpositive_trimmed(trim(automaton));
}

std::vector<Rational> fatou_potential(const WeightedAutomaton& trimmed) {
  require_max_plus(trimmed, "fatou_potential");
  Verdict v = nonpositive_trimmed(trimmed);
  if (!v) throw NotNonpositiveError("series takes a positive value", *v.witness);
  return potential_unchecked(trimmed);
}

WeightedAutomaton fatou_normalize(const WeightedAutomaton& automaton) {
  require_max_plus(automaton, "fatou_normalize");
  WeightedAutomaton t = trim(automaton);
  return conjugate(t, fatou_potential(t));
}

std::vector<MonoidElement> boolean_monoid_closure(const BooleanAutomaton& nfa, std::size_t cap) {
  if (cap < 1) throw CapExceededError("monoid closure needs a cap of at least 1", cap);
  const std::size_t n = nfa.num_states;
  std::vector<BoolMatrix> generators;
  for (std::size_t l = 0; l < nfa.alphabet.size(); ++l) {
    BoolMatrix g(n);
    for (State p = 0; p < n; ++p)
      for (State q : nfa.delta[l][p]) g.set(p, q);
    generators.push_back(std::move(g));
  }
  std::vector<MonoidElement> elements;
  std::unordered_map<BoolMatrix, std::size_t, BoolMatrixHash> index;
  elements.push_back({BoolMatrix::identity(n), ""});
  index.emplace(elements.back().matrix, 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t l = 0; l < generators.size(); ++l) {
      BoolMatrix product = elements[i].matrix * generators[l];
      if (index.count(product)) continue;
      if (elements.size() >= cap) throw CapExceededError("transition monoid too large", cap);
      index.emplace(product, elements.size());
      Word word = elements[i].word + nfa.alphabet[l];
      elements.push_back({std::move(product), std::move(word)});
    }
  }
  return elements;
}

Verdict decide_equal_const(const WeightedAutomaton& automaton, const Rational& c,
                           const DecisionOptions& options) {
  auto step = shift_and_normalize(automaton, c);
  if (auto* v = std::get_if<Verdict>(&step)) return *v;
  const auto& normalized = std::get<Normalized>(step).normalized;
  BooleanAutomaton filtered = zero_filter(normalized);
  for (const auto& element : boolean_monoid_closure(filtered, options.monoid_cap)) {
    bool hit = false;
    for (State i : filtered.initial) {
      for (State j : filtered.final) {
        if (element.matrix.get(i, j)) {
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
    if (!hit) return Verdict::no(element.word);
  }
  return Verdict::yes();
}

Verdict decide_equal_const_on_support(const WeightedAutomaton& automaton, const Rational& c,
                                      const DecisionOptions&) {
  auto step = shift_and_normalize(automaton, c);
  if (auto* v = std::get_if<Verdict>(&step)) return *v;
  const auto& [shifted, normalized] = std::get<Normalized>(step);
  return nfa_equivalence(support(shifted), zero_filter(normalized));
}

namespace {

using Subset = std::vector<State>;

Subset advance(const BooleanAutomaton& a, const Subset& from, std::size_t letter) {
  std::vector<bool> mark(a.num_states, false);
  for (State p : from)
    for (State q : a.delta[letter][p]) mark[q] = true;
  Subset next;
  for (State q = 0; q < a.num_states; ++q)
    if (mark[q]) next.push_back(q);
  return next;
}

bool accepting(const BooleanAutomaton& a, const Subset& s) {
  auto fi = a.final.begin();
  auto si = s.begin();
  while (fi != a.final.end() && si != s.end()) {
    if (*fi == *si) return true;
    if (*fi < *si) {
      ++fi;
    } else {
      ++si;
    }
  }
  return false;
}

enum class Relation { Equivalent, Included };

Verdict product_search(const BooleanAutomaton& a, const BooleanAutomaton& b, Relation relation) {
  if (a.alphabet != b.alphabet) throw AlphabetError("NFA comparison: alphabets differ");
  struct Node {
    Subset left;
    Subset right;
    std::size_t parent;
    char symbol;
  };
  std::vector<Node> nodes;
  std::map<std::pair<Subset, Subset>, std::size_t> index;
  nodes.push_back({a.initial, b.initial, 0, 0});
  index.emplace(std::make_pair(a.initial, b.initial), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    bool in_a = accepting(a, nodes[i].left);
    bool in_b = accepting(b, nodes[i].right);
    bool violation = relation == Relation::Equivalent ? in_a != in_b : in_a && !in_b;
    if (violation) {
      Word reversed;
      for (std::size_t j = i; j != 0; j = nodes[j].parent) reversed.push_back(nodes[j].symbol);
      return Verdict::no(Word(reversed.rbegin(), reversed.rend()));
    }
    for (std::size_t l = 0; l < a.alphabet.size(); ++l) {
      Subset left = advance(a, nodes[i].left, l);
      Subset right = advance(b, nodes[i].right, l);
      if (relation == Relation::Included && left.empty()) continue;
      auto key = std::make_pair(left, right);
      if (index.count(key)) continue;
      index.emplace(std::move(key), nodes.size());
      nodes.push_back({std::move(left), std::move(right), i, a.alphabet[l]});
    }
  }
  return Verdict::yes();
}

}  // namespace

Verdict nfa_equivalence(const BooleanAutomaton& a, const BooleanAutomaton& b) {
  return product_search(a, b, Relation::Equivalent);
}

Verdict nfa_inclusion(const BooleanAutomaton& a, const BooleanAutomaton& b) {
  return product_search(a, b, Relation::Included);
}

namespace {

void require_max_min_pair(const WeightedAutomaton& a, const WeightedAutomaton& b, const char* op) {
  if (a.tag() != SemiringTag::MaxPlus || b.tag() != SemiringTag::MinPlus) {
    throw SemiringError(std::string(op) + ": expects a max-plus and a min-plus automaton");
  }
  if (a.alphabet() != b.alphabet()) throw AlphabetError(std::string(op) + ": alphabets differ");
}

}  // namespace

Verdict decide_series_equal(const WeightedAutomaton& max_plus, const WeightedAutomaton& min_plus,
                            const DecisionOptions& options) {
  require_max_min_pair(max_plus, min_plus, "decide_series_equal");
  WeightedAutomaton s = trim(max_plus);
  WeightedAutomaton t = trim(min_plus);
  Verdict same_support = nfa_equivalence(support(s), support(t));
  if (!same_support) return same_support;
  return decide_equal_const_on_support(hadamard(s, negate_series(t)), 0, options);
}

Verdict decide_series_leq(const WeightedAutomaton& max_plus, const WeightedAutomaton& min_plus) {
  require_max_min_pair(max_plus, min_plus, "decide_series_leq");
  WeightedAutomaton s = trim(max_plus);
  WeightedAutomaton t = trim(min_plus);
  Verdict included = nfa_inclusion(support(s), support(t));
  if (!included) return included;
  return decide_nonpositive(hadamard(s, negate_series(t)));
}

WeightedAutomaton shift_series(const WeightedAutomaton& automaton, const Rational& delta) {
  WeightedAutomaton result = automaton;
  for (State q = 0; q < result.num_states(); ++q) {
    if (result.final_weight(q).is_finite()) {
      result.set_final(q, Weight(Rational(result.final_weight(q).value() + delta)));
    }
  }
  return result;
}

}  // namespace twa
