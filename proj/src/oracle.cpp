#include "twa/oracle.hpp"

#include <cmath>

namespace twa::oracle {

namespace {

void extend(const WeightedAutomaton& a, std::string_view word, std::size_t depth,
            std::vector<State>& states, Rational& weight, std::vector<Path>& out) {
  State p = states.back();
  if (depth == word.size()) {
    if (a.final_weight(p).is_finite()) {
      out.push_back({states, Weight(Rational(weight + a.final_weight(p).value()))});
    }
    return;
  }
  std::size_t letter = a.require_letter(word[depth]);
  for (const auto& t : a.transitions(letter, p)) {
    states.push_back(t.target);
    weight += t.weight.value();
    extend(a, word, depth + 1, states, weight, out);
    weight -= t.weight.value();
    states.pop_back();
  }
}

}  // namespace

std::vector<Path> enum_paths(const WeightedAutomaton& automaton, std::string_view word) {
  for (char c : word) automaton.require_letter(c);
  std::vector<Path> out;
  for (State q = 0; q < automaton.num_states(); ++q) {
    if (automaton.initial(q).is_zero()) continue;
    std::vector<State> states{q};
    Rational weight = automaton.initial(q).value();
    extend(automaton, word, 0, states, weight, out);
  }
  return out;
}

Weight eval_bruteforce(const WeightedAutomaton& automaton, std::string_view word) {
  Weight best;
  for (const auto& path : enum_paths(automaton, word)) {
    if (best.is_zero()) {
      best = path.weight;
    } else if (automaton.tag() == SemiringTag::MinPlus ? path.weight.value() < best.value()
                                                       : path.weight.value() > best.value()) {
      best = path.weight;
    }
  }
  if (automaton.tag() == SemiringTag::Boolean && best.is_finite()) return Weight::one();
  return best;
}

std::size_t ambiguity(const WeightedAutomaton& automaton, std::string_view word) {
  return enum_paths(automaton, word).size();
}

void for_each_word(std::string_view alphabet, std::size_t max_length,
                   const std::function<bool(const Word&)>& visit) {
  double total = 0;
  for (std::size_t len = 0; len <= max_length; ++len) {
    total += std::pow(static_cast<double>(alphabet.size()), static_cast<double>(len));
    if (total > 1e7) throw BoundExceededError("word enumeration exceeds 10^7 words");
  }
  for (std::size_t len = 0; len <= max_length; ++len) {
    if (len > 0 && alphabet.empty()) break;
    std::vector<std::size_t> digits(len, 0);
    Word word(len, len ? alphabet[0] : '\0');
    while (true) {
      if (!visit(word)) return;
      std::size_t i = len;
      while (i > 0 && digits[i - 1] + 1 == alphabet.size()) {
        digits[i - 1] = 0;
        word[i - 1] = alphabet[0];
        --i;
      }
      if (i == 0) break;
      ++digits[i - 1];
      word[i - 1] = alphabet[digits[i - 1]];
    }
  }
}

Finding equal_upto(const WeightedAutomaton& a, const WeightedAutomaton& b, std::size_t max_length) {
  if (a.alphabet() != b.alphabet()) throw AlphabetError("equal_upto: alphabets differ");
  Finding finding;
  for_each_word(a.alphabet(), max_length, [&](const Word& w) {
    if (eval_bruteforce(a, w) == eval_bruteforce(b, w)) return true;
    finding = {false, w};
    return false;
  });
  return finding;
}

Finding one_valued_upto(const WeightedAutomaton& a, std::size_t max_length) {
  Finding finding;
  for_each_word(a.alphabet(), max_length, [&](const Word& w) {
    auto paths = enum_paths(a, w);
    for (const auto& p : paths) {
      if (!(p.weight == paths.front().weight)) {
        finding = {false, w};
        return false;
      }
    }
    return true;
  });
  return finding;
}

Finding unambiguous_upto(const WeightedAutomaton& a, std::size_t max_length) {
  Finding finding;
  for_each_word(a.alphabet(), max_length, [&](const Word& w) {
    if (ambiguity(a, w) <= 1) return true;
    finding = {false, w};
    return false;
  });
  return finding;
}

std::pair<std::size_t, Word> max_ambiguity(const WeightedAutomaton& a, std::size_t max_length) {
  std::pair<std::size_t, Word> worst{0, ""};
  for_each_word(a.alphabet(), max_length, [&](const Word& w) {
    std::size_t count = ambiguity(a, w);
    if (count > worst.first) worst = {count, w};
    return true;
  });
  return worst;
}

namespace {

// Circuits whose smallest vertex is `start`: DFS over vertices > start.
void circuits_from(const TropicalMatrix& m, std::size_t start, std::vector<std::size_t>& path,
                   std::vector<bool>& on_path, Rational& weight, std::vector<SimpleCircuit>& out) {
  std::size_t v = path.back();
  for (std::size_t w = start; w < m.size(); ++w) {
    if (m(v, w).is_zero()) continue;
    if (w == start) {
      Rational mean = (weight + m(v, w).value()) / Rational(path.size());
      mean.canonicalize();
      out.push_back({path, mean});
    } else if (!on_path[w]) {
      on_path[w] = true;
      path.push_back(w);
      weight += m(v, w).value();
      circuits_from(m, start, path, on_path, weight, out);
      weight -= m(v, w).value();
      path.pop_back();
      on_path[w] = false;
    }
  }
}

}  // namespace

std::vector<SimpleCircuit> simple_circuits(const TropicalMatrix& m) {
  if (m.tag() != SemiringTag::MaxPlus) throw SemiringError("simple_circuits: needs max-plus");
  std::vector<SimpleCircuit> out;
  for (std::size_t start = 0; start < m.size(); ++start) {
    std::vector<std::size_t> path{start};
    std::vector<bool> on_path(m.size(), false);
    on_path[start] = true;
    Rational weight = 0;
    circuits_from(m, start, path, on_path, weight, out);
  }
  return out;
}

}  // namespace twa::oracle
