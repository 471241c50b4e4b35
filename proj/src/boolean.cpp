#include "twa/boolean.hpp"

#include <algorithm>

#include "twa/automaton.hpp"

namespace twa {

BoolMatrix::BoolMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void BoolMatrix::set(std::size_t i, std::size_t j, bool value) {
  std::uint64_t mask = std::uint64_t{1} << (j % 64);
  if (value) {
    bits_[i * words_ + j / 64] |= mask;
  } else {
    bits_[i * words_ + j / 64] &= ~mask;
  }
}

BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b) {
  BoolMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    std::uint64_t* out = &c.bits_[i * c.words_];
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (!a.get(i, k)) continue;
      const std::uint64_t* row = &b.bits_[k * b.words_];
      for (std::size_t w = 0; w < c.words_; ++w) out[w] |= row[w];
    }
  }
  return c;
}

std::size_t BoolMatrix::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ n_;
  for (std::uint64_t w : bits_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

BooleanAutomaton::BooleanAutomaton(std::string alphabet_, std::size_t n)
    : alphabet(std::move(alphabet_)),
      num_states(n),
      delta(alphabet.size(), std::vector<std::vector<State>>(n)) {}

void BooleanAutomaton::add_transition(std::size_t letter, State source, State target) {
  if (source >= num_states || target >= num_states) {
    throw DimensionError("Boolean transition out of range");
  }
  auto& row = delta.at(letter)[source];
  auto it = std::lower_bound(row.begin(), row.end(), target);
  if (it == row.end() || *it != target) row.insert(it, target);
}

std::size_t BooleanAutomaton::require_letter(char symbol) const {
  auto pos = alphabet.find(symbol);
  if (pos == std::string::npos) {
    throw AlphabetError(std::string("symbol '") + symbol + "' is not in the alphabet");
  }
  return pos;
}

bool BooleanAutomaton::accepts(std::string_view word) const {
  std::vector<bool> current(num_states, false);
  for (State q : initial) current[q] = true;
  for (char symbol : word) {
    std::size_t letter = require_letter(symbol);
    std::vector<bool> next(num_states, false);
    for (State p = 0; p < num_states; ++p)
      if (current[p])
        for (State q : delta[letter][p]) next[q] = true;
    current = std::move(next);
  }
  return std::any_of(final.begin(), final.end(), [&](State q) { return current[q]; });
}

}  // namespace twa
