#include "twa/format.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace twa {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > start) fields.push_back(line.substr(start, pos - start));
  }
  return fields;
}

std::string_view without_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::size_t parse_count(std::string_view text, std::size_t line) {
  if (text.empty() || text.size() > 18) throw ParseError(line, "bad number '" + std::string(text) + "'");
  std::size_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError(line, "bad number '" + std::string(text) + "'");
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

Rational parse_literal(std::string_view text, std::size_t line) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw ParseError(line, e.what());
  }
}

struct Builder {
  std::optional<SemiringTag> tag;
  std::optional<std::string> alphabet;
  std::optional<std::size_t> states;
  std::optional<AnyAutomaton> automaton;

  void ensure_started(std::size_t line) {
    if (automaton) return;
    if (!tag) throw ParseError(line, "missing 'semiring' header");
    if (!alphabet) throw ParseError(line, "missing 'alphabet' header");
    if (!states) throw ParseError(line, "missing 'states' header");
    try {
      if (*tag == SemiringTag::MaxPlusPair) {
        automaton.emplace(PairAutomaton(*tag, *alphabet, *states));
      } else {
        automaton.emplace(WeightedAutomaton(*tag, *alphabet, *states));
      }
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
  }
};

template <class W>
W parse_weight_field(std::string_view text, std::size_t line);

template <>
Weight parse_weight_field<Weight>(std::string_view text, std::size_t line) {
  return Weight(parse_literal(text, line));
}

template <>
PairWeight parse_weight_field<PairWeight>(std::string_view text, std::size_t line) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError(line, "pair weight must be 'w1,w2'");
  return PairWeight(parse_literal(text.substr(0, comma), line),
                    parse_literal(text.substr(comma + 1), line));
}

template <class W>
void apply_entry(BasicAutomaton<W>& a, const std::vector<std::string_view>& f, std::size_t line) {
  auto state = [&](std::string_view text) {
    std::size_t q = parse_count(text, line);
    if (q >= a.num_states()) {
      throw ParseError(line, "state " + std::string(text) + " out of range (states " +
                                 std::to_string(a.num_states()) + ")");
    }
    return q;
  };
  if (f[0] == "initial" || f[0] == "final") {
    if (f.size() != 3) throw ParseError(line, std::string(f[0]) + " expects: state weight");
    State q = state(f[1]);
    W w = parse_weight_field<W>(f[2], line);
    const W& current = f[0] == "initial" ? a.initial(q) : a.final_weight(q);
    if (!current.is_zero()) throw ParseError(line, "duplicate " + std::string(f[0]) + " for state " + std::string(f[1]));
    if (f[0] == "initial") {
      a.set_initial(q, std::move(w));
    } else {
      a.set_final(q, std::move(w));
    }
    return;
  }
  if (f.size() != 5) throw ParseError(line, "trans expects: source target letter weight");
  State source = state(f[1]);
  State target = state(f[2]);
  if (f[3].size() != 1) throw ParseError(line, "letter must be a single symbol");
  auto letter = a.letter_index(f[3][0]);
  if (!letter) throw ParseError(line, "letter '" + std::string(f[3]) + "' not in alphabet");
  W w = parse_weight_field<W>(f[4], line);
  if (!a.transition(*letter, source, target).is_zero()) {
    throw ParseError(line, "duplicate arc " + std::string(f[1]) + " " + std::string(f[2]) + " " +
                               std::string(f[3]));
  }
  a.set_transition(*letter, source, target, std::move(w));
}

}  // namespace

AnyAutomaton parse_twa(std::string_view text) {
  Builder b;
  bool saw_magic = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto f = split_fields(without_comment(raw));
    if (f.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string_view key = f[0];
    if (!saw_magic) {
      if (key != "twa" || f.size() != 2 || f[1] != "1") {
        throw ParseError(line_no, "expected 'twa 1' header");
      }
      saw_magic = true;
    } else if (key == "semiring" || key == "alphabet" || key == "states") {
      if (b.automaton) throw ParseError(line_no, std::string(key) + " after arc lines");
      if (key == "semiring") {
        if (b.tag) throw ParseError(line_no, "duplicate 'semiring' header");
        if (f.size() != 2) throw ParseError(line_no, "semiring expects one name");
        if (f[1] == "max-plus") {
          b.tag = SemiringTag::MaxPlus;
        } else if (f[1] == "min-plus") {
          b.tag = SemiringTag::MinPlus;
        } else if (f[1] == "max-plus-pair") {
          b.tag = SemiringTag::MaxPlusPair;
        } else {
          throw ParseError(line_no, "unknown semiring '" + std::string(f[1]) + "'");
        }
      } else if (key == "alphabet") {
        if (b.alphabet) throw ParseError(line_no, "duplicate 'alphabet' header");
        std::string symbols;
        for (std::size_t i = 1; i < f.size(); ++i) {
          if (f[i].size() != 1) throw ParseError(line_no, "alphabet symbols are single characters");
          if (symbols.find(f[i][0]) != std::string::npos) {
            throw ParseError(line_no, "duplicate alphabet symbol '" + std::string(f[i]) + "'");
          }
          symbols.push_back(f[i][0]);
        }
        b.alphabet = std::move(symbols);
      } else {
        if (b.states) throw ParseError(line_no, "duplicate 'states' header");
        if (f.size() != 2) throw ParseError(line_no, "states expects a count");
        b.states = parse_count(f[1], line_no);
      }
    } else if (key == "initial" || key == "final" || key == "trans") {
      b.ensure_started(line_no);
      std::visit([&](auto& a) { apply_entry(a, f, line_no); }, *b.automaton);
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
    if (end == text.size()) break;
  }
  if (!saw_magic) throw ParseError(line_no == 0 ? 1 : line_no, "expected 'twa 1' header");
  b.ensure_started(line_no);
  return std::move(*b.automaton);
}

WeightedAutomaton parse_weighted(std::string_view text) {
  AnyAutomaton any = parse_twa(text);
  if (auto* a = std::get_if<WeightedAutomaton>(&any)) return std::move(*a);
  throw SemiringError("expected a max-plus or min-plus automaton, got max-plus-pair");
}

namespace {

std::string weight_text(const Weight& w) { return format_rational(w.value()); }
std::string weight_text(const PairWeight& w) {
  return format_rational(w.first().value()) + "," + format_rational(w.second().value());
}

template <class W>
std::string serialize_impl(const BasicAutomaton<W>& a) {
  std::ostringstream out;
  out << "twa 1\n";
  out << "semiring " << to_string(a.tag()) << "\n";
  out << "alphabet";
  for (char c : a.alphabet()) out << ' ' << c;
  out << "\n";
  out << "states " << a.num_states() << "\n";
  if (a.has_labels()) {
    for (State q = 0; q < a.num_states(); ++q) out << "# state " << q << " " << a.label(q) << "\n";
  }
  for (State q = 0; q < a.num_states(); ++q)
    if (!a.initial(q).is_zero()) out << "initial " << q << ' ' << weight_text(a.initial(q)) << "\n";
  for (State q = 0; q < a.num_states(); ++q)
    if (!a.final_weight(q).is_zero()) out << "final " << q << ' ' << weight_text(a.final_weight(q)) << "\n";
  for (State q = 0; q < a.num_states(); ++q)
    for (std::size_t l = 0; l < a.num_letters(); ++l)
      for (const auto& t : a.transitions(l, q))
        out << "trans " << q << ' ' << t.target << ' ' << a.alphabet()[l] << ' '
            << weight_text(t.weight) << "\n";
  return out.str();
}

}  // namespace

std::string serialize(const WeightedAutomaton& automaton) {
  if (automaton.tag() == SemiringTag::Boolean) {
    throw SemiringError("the .twa format has no Boolean semiring");
  }
  return serialize_impl(automaton);
}

std::string serialize(const PairAutomaton& automaton) { return serialize_impl(automaton); }

std::string serialize(const AnyAutomaton& automaton) {
  return std::visit([](const auto& a) { return serialize(a); }, automaton);
}

std::string strip_comments(std::string_view text) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto fields = split_fields(without_comment(text.substr(pos, end - pos)));
    pos = end + 1;
    if (fields.empty()) continue;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ' ';
      out += fields[i];
    }
    out += '\n';
  }
  return out;
}

AnyAutomaton load_twa(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_twa(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

WeightedAutomaton load_weighted(const std::string& path) {
  AnyAutomaton any = load_twa(path);
  if (auto* a = std::get_if<WeightedAutomaton>(&any)) return std::move(*a);
  throw SemiringError(path + ": expected a max-plus or min-plus automaton");
}

void save_twa(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace twa
