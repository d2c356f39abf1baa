#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covertrie/dta.hpp"

namespace covertrie {

/// Canonical text form:
///
///   dta <num-states> root 0
///   finals <id> <id> ...
///   t <from> <symbol-char> <to>
///
/// States are renumbered into preorder with children visited in ascending
/// display-character order, so two valid automata serialize to the same
/// text exactly when they are isomorphic as rooted labeled trees. Symbols
/// appear as their UTF-8 character, t-lines sorted by source state then
/// symbol.
std::string canonical_serialize(const Dta& dta);

struct ParseOutcome {
    std::optional<Dta> dta;         // present iff violations is empty
    std::vector<Violation> violations;
};

/// Parses the text form and validates the result. Syntax errors are
/// reported as MalformedLine violations with a line number; a syntactically
/// well-formed description that breaks a structural invariant yields the
/// validator's violations instead. Never throws on bad input.
ParseOutcome parse_automaton(std::string_view text);

/// One word per line; a blank line is the empty word. Rejects an input
/// with no lines at all and invalid UTF-8 (std::runtime_error).
std::vector<std::u32string> parse_word_list(std::string_view text);

std::string format_word_list(const std::vector<std::u32string>& words);

/// Highlighting for export_dot: edge_covered[to-state] marks the incoming
/// edge of that state, anchors are drawn emphasized.
struct DotOverlay {
    std::vector<std::uint8_t> edge_covered;
    std::vector<StateId> anchors;
};

std::string export_dot(const Dta& dta, const DotOverlay* overlay = nullptr);

}  // namespace covertrie
