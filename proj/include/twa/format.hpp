#pragma once

/**
 * @file format.hpp
 * @brief The line-oriented `.twa` text format.
 *
 *     twa 1
 *     semiring max-plus        # or: min-plus | max-plus-pair
 *     alphabet a b
 *     states 2
 *     initial 0 0
 *     final 1 1
 *     trans 0 1 a 1            # source target letter weight
 *
 * `#` starts a comment. Absent entries are the semiring zero. Pair weights
 * are written `w1,w2`. The header lines (twa, semiring, alphabet, states)
 * must come before any initial/final/trans line.
 */

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "twa/automaton.hpp"

namespace twa {

using AnyAutomaton = std::variant<WeightedAutomaton, PairAutomaton>;

/// Throws ParseError (with the offending line number) on malformed input,
/// duplicate entries or out-of-range states.
AnyAutomaton parse_twa(std::string_view text);

/// parse_twa restricted to max-plus / min-plus files.
WeightedAutomaton parse_weighted(std::string_view text);

/// Canonical text: initial, final, then transitions ordered by source
/// state, letter (alphabet order) and target. State labels, if any, are
/// emitted as comments.
std::string serialize(const WeightedAutomaton& automaton);
std::string serialize(const PairAutomaton& automaton);
std::string serialize(const AnyAutomaton& automaton);

/// Drops comments, blank lines and redundant whitespace, for comparing
/// hand-written files with serializer output.
std::string strip_comments(std::string_view text);

AnyAutomaton load_twa(const std::string& path);
WeightedAutomaton load_weighted(const std::string& path);
void save_twa(const std::string& path, const std::string& text);

}  // namespace twa
