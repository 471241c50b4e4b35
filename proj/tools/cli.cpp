#include "cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>

#include "twa/decisions.hpp"
#include "twa/disambiguation.hpp"
#include "twa/format.hpp"
#include "twa/oracle.hpp"
#include "twa/spectral.hpp"

namespace twa::cli {

namespace {

std::string quote_word(const Word& w) { return w.empty() ? std::string("\"\"") : w; }

int report(std::ostream& out, const Verdict& v, const char* yes, const char* no) {
  if (v.holds) {
    out << yes << "\n";
    return kHolds;
  }
  out << no << " witness=" << quote_word(v.witness.value_or("")) << "\n";
  return kFails;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    save_twa(path, text);
  }
}

WeightedAutomaton load_tagged(const std::string& path, SemiringTag tag, const char* role) {
  WeightedAutomaton a = load_weighted(path);
  if (a.tag() != tag) {
    throw SemiringError(path + ": " + role + " automaton must be " + std::string(to_string(tag)));
  }
  return a;
}

WeightedAutomaton load_scalar(const std::string& path) {
  WeightedAutomaton a = load_weighted(path);
  if (a.tag() != SemiringTag::MaxPlus && a.tag() != SemiringTag::MinPlus) {
    throw SemiringError(path + ": expected max-plus or min-plus");
  }
  return a;
}

struct Args {
  std::string file;
  std::string second;
  std::string word;
  std::string constant;
  std::string output;
  bool on_support = false;
  bool no_check = false;
  std::size_t monoid_cap = DecisionOptions{}.monoid_cap;
  std::size_t subset_cap = PipelineOptions{}.subset_cap;
  std::size_t max_length = 8;
};

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted automata over max-plus / min-plus semirings with exact rational weights",
               "twa"};
  app.require_subcommand(1);
  Args a;
  std::function<int()> action;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", a.output, "Write the resulting .twa here (default: stdout)");
  };
  auto add_monoid_cap = [&](CLI::App* sub) {
    sub->add_option("--monoid-cap", a.monoid_cap, "Maximum size of the Boolean transition monoid")
        ->check(CLI::PositiveNumber);
  };
  auto add_subset_cap = [&](CLI::App* sub) {
    sub->add_option("--subset-cap", a.subset_cap, "Maximum number of subsets when determinizing")
        ->check(CLI::PositiveNumber);
  };

  auto* eval_cmd = app.add_subcommand("eval", "Print the coefficient of a word");
  eval_cmd->add_option("file", a.file)->required();
  eval_cmd->add_option("word", a.word, "Word to evaluate; \"\" for the empty word")->required();
  eval_cmd->callback([&] {
    action = [&] {
      AnyAutomaton any = load_twa(a.file);
      std::visit([&](const auto& m) { out << format_weight(eval(m, a.word), m.tag()) << "\n"; }, any);
      return kHolds;
    };
  });

  auto* trim_cmd = app.add_subcommand("trim", "Keep accessible and co-accessible states");
  trim_cmd->add_option("file", a.file)->required();
  add_output(trim_cmd);
  trim_cmd->callback([&] {
    action = [&] {
      AnyAutomaton any = load_twa(a.file);
      std::visit([&](const auto& m) { emit(out, a.output, serialize(trim(m))); }, any);
      return kHolds;
    };
  });

  auto* rho_cmd = app.add_subcommand(
      "rho", "Maximum cycle mean of the letter-sum matrix (minimum for min-plus files)");
  rho_cmd->add_option("file", a.file)->required();
  rho_cmd->callback([&] {
    action = [&] {
      WeightedAutomaton m = load_scalar(a.file);
      if (m.tag() == SemiringTag::MaxPlus) {
        out << format_weight(max_mean_cycle(letter_sum(m)), m.tag()) << "\n";
      } else {
        Weight rho = negate_weight(max_mean_cycle(letter_sum(negate_series(m))));
        out << format_weight(rho, m.tag()) << "\n";
      }
      return kHolds;
    };
  });

  auto* nonpos_cmd = app.add_subcommand(
      "check-nonpositive",
      "Decide <S,w> <= 0 for all w (for min-plus files: the dual <S,w> >= 0)");
  nonpos_cmd->add_option("file", a.file)->required();
  nonpos_cmd->callback([&] {
    action = [&] {
      WeightedAutomaton m = load_scalar(a.file);
      if (m.tag() == SemiringTag::MinPlus) m = negate_series(m);
      return report(out, decide_nonpositive(m), "YES", "NO");
    };
  });

  auto* fatou_cmd = app.add_subcommand(
      "fatou", "Reweight a nonpositive series so every weight is <= 0 (>= 0 for min-plus)");
  fatou_cmd->add_option("file", a.file)->required();
  add_output(fatou_cmd);
  fatou_cmd->callback([&] {
    action = [&] {
      WeightedAutomaton m = load_scalar(a.file);
      bool dual = m.tag() == SemiringTag::MinPlus;
      try {
        WeightedAutomaton result = dual ? negate_series(fatou_normalize(negate_series(m)))
                                        : fatou_normalize(m);
        emit(out, a.output, serialize(result));
      } catch (const NotNonpositiveError& e) {
        out << "NO witness=" << quote_word(e.witness()) << "\n";
        return kFails;
      }
      return kHolds;
    };
  });

  auto* const_cmd = app.add_subcommand("equal-const", "Decide whether the series is the constant c");
  const_cmd->add_option("file", a.file)->required();
  const_cmd->add_option("c", a.constant)->required();
  const_cmd->add_flag("--on-support", a.on_support, "Only compare on the support");
  add_monoid_cap(const_cmd);
  const_cmd->callback([&] {
    action = [&] {
      WeightedAutomaton m = load_scalar(a.file);
      Rational c = parse_rational(a.constant);
      if (m.tag() == SemiringTag::MinPlus) {
        m = negate_series(m);
        c = -c;
      }
      DecisionOptions options{a.monoid_cap};
      Verdict v = a.on_support ? decide_equal_const_on_support(m, c, options)
                               : decide_equal_const(m, c, options);
      return report(out, v, "EQUAL", "NOT-EQUAL");
    };
  });

  auto* equal_cmd = app.add_subcommand("equal", "Decide equality of a max-plus and a min-plus series");
  equal_cmd->add_option("max", a.file)->required();
  equal_cmd->add_option("min", a.second)->required();
  add_monoid_cap(equal_cmd);
  equal_cmd->callback([&] {
    action = [&] {
      auto s = load_tagged(a.file, SemiringTag::MaxPlus, "first");
      auto t = load_tagged(a.second, SemiringTag::MinPlus, "second");
      return report(out, decide_series_equal(s, t, DecisionOptions{a.monoid_cap}), "EQUAL",
                    "NOT-EQUAL");
    };
  });

  auto* leq_cmd = app.add_subcommand("leq", "Decide S <= T for max-plus S and min-plus T");
  leq_cmd->add_option("max", a.file)->required();
  leq_cmd->add_option("min", a.second)->required();
  leq_cmd->callback([&] {
    action = [&] {
      auto s = load_tagged(a.file, SemiringTag::MaxPlus, "first");
      auto t = load_tagged(a.second, SemiringTag::MinPlus, "second");
      return report(out, decide_series_leq(s, t), "YES", "NO");
    };
  });

  auto constructive = [&](const char* name, const char* help, bool disambiguate_too) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("max", a.file)->required();
    sub->add_option("min", a.second)->required();
    add_output(sub);
    add_monoid_cap(sub);
    sub->add_flag("--no-check", a.no_check, "Skip the equality check");
    if (disambiguate_too) add_subset_cap(sub);
    sub->callback([&, disambiguate_too] {
      action = [&, disambiguate_too] {
        auto s = load_tagged(a.file, SemiringTag::MaxPlus, "first");
        auto t = load_tagged(a.second, SemiringTag::MinPlus, "second");
        PipelineOptions options{!a.no_check, a.monoid_cap, a.subset_cap};
        try {
          WeightedAutomaton result = disambiguate_too ? unambiguous_from_pair(s, t, options)
                                                      : extract_one_valued(s, t, options);
          emit(out, a.output, serialize(result));
        } catch (const NotEqualError& e) {
          out << "NOT-EQUAL witness=" << quote_word(e.witness()) << "\n";
          return kFails;
        }
        return kHolds;
      };
    });
  };
  constructive("onevalued", "Build a 1-valued automaton from an equivalent max/min pair", false);
  constructive("pipeline", "Build an unambiguous automaton from an equivalent max/min pair", true);

  auto* dis_cmd = app.add_subcommand("disambiguate", "Unambiguous automaton for a 1-valued input");
  dis_cmd->add_option("file", a.file)->required();
  add_output(dis_cmd);
  add_subset_cap(dis_cmd);
  dis_cmd->callback([&] {
    action = [&] {
      emit(out, a.output, serialize(disambiguate(load_scalar(a.file), a.subset_cap)));
      return kHolds;
    };
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force checks on all short words");
  oracle_cmd->require_subcommand(1);
  auto* compare_cmd = oracle_cmd->add_subcommand("compare", "Compare two series word by word");
  compare_cmd->add_option("a", a.file)->required();
  compare_cmd->add_option("b", a.second)->required();
  compare_cmd->add_option("--maxlen", a.max_length, "Longest word to check")->capture_default_str();
  compare_cmd->callback([&] {
    action = [&] {
      auto f = oracle::equal_upto(load_scalar(a.file), load_scalar(a.second), a.max_length);
      return report(out, Verdict{f.holds, f.witness}, "EQUAL", "NOT-EQUAL");
    };
  });
  auto* amb_cmd = oracle_cmd->add_subcommand("ambiguity", "Largest number of paths for one word");
  amb_cmd->add_option("file", a.file)->required();
  amb_cmd->add_option("--maxlen", a.max_length, "Longest word to check")->capture_default_str();
  amb_cmd->callback([&] {
    action = [&] {
      auto [count, word] = oracle::max_ambiguity(load_scalar(a.file), a.max_length);
      out << "max-ambiguity=" << count << " witness=" << quote_word(word) << "\n";
      return count <= 1 ? kHolds : kFails;
    };
  });

  try {
    std::vector<std::string> reversed(raw_args.rbegin(), raw_args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action();
  } catch (const CapExceededError& e) {
    err << "twa: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const BoundExceededError& e) {
    err << "twa: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "twa: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace twa::cli
