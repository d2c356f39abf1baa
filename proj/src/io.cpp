#include "covertrie/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

namespace covertrie {

namespace {

std::string u32_to_utf8(char32_t c) { return utf8_encode(c); }

std::optional<std::uint64_t> parse_number(std::string_view field) {
    if (field.empty()) return std::nullopt;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) return std::nullopt;
    return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    for (auto& line : lines) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    }
    return lines;
}

}  // namespace

std::string canonical_serialize(const Dta& dta) {
    const std::size_t n = dta.num_states();
    // Preorder renumbering with children in ascending display-character
    // order; the numbering then depends only on tree shape and labels.
    std::vector<StateId> renumber(n, kNoState);
    std::vector<StateId> order;
    order.reserve(n);
    std::vector<StateId> stack = {dta.root()};
    while (!stack.empty()) {
        StateId q = stack.back();
        stack.pop_back();
        if (renumber[q] != kNoState) continue;
        renumber[q] = static_cast<StateId>(order.size());
        order.push_back(q);
        std::vector<std::pair<char32_t, StateId>> kids;
        for (const Transition& t : dta.children(q)) {
            kids.push_back({dta.alphabet().display(t.symbol), t.to});
        }
        std::sort(kids.begin(), kids.end());
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(it->second);
    }

    std::string out = "dta " + std::to_string(order.size()) + " root 0\n";
    std::vector<StateId> finals;
    for (StateId q : dta.finals()) {
        if (renumber[q] != kNoState) finals.push_back(renumber[q]);
    }
    std::sort(finals.begin(), finals.end());
    out += "finals";
    for (StateId q : finals) out += " " + std::to_string(q);
    out += "\n";

    for (StateId q : order) {
        std::vector<std::pair<char32_t, StateId>> kids;
        for (const Transition& t : dta.children(q)) {
            kids.push_back({dta.alphabet().display(t.symbol), t.to});
        }
        std::sort(kids.begin(), kids.end());
        for (auto [display, to] : kids) {
            out += "t " + std::to_string(renumber[q]) + " " + u32_to_utf8(display) + " " +
                   std::to_string(renumber[to]) + "\n";
        }
    }
    return out;
}

ParseOutcome parse_automaton(std::string_view text) {
    ParseOutcome outcome;
    auto malformed = [&](std::size_t line_no, std::string what) {
        outcome.violations.push_back(
            {ViolationKind::MalformedLine, "line " + std::to_string(line_no) + ": " + std::move(what)});
    };

    std::vector<std::string_view> lines = split_lines(text);

    std::optional<std::uint64_t> num_states;
    std::optional<std::uint64_t> root;
    std::optional<std::vector<StateId>> finals;
    struct RawTransition {
        std::uint64_t from;
        char32_t symbol;
        std::uint64_t to;
    };
    std::vector<RawTransition> raw;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string_view line = lines[i];
        const std::size_t line_no = i + 1;
        if (line.empty()) continue;

        if (!num_states) {
            // Header: dta <n> root <r>
            if (!line.starts_with("dta ")) {
                malformed(line_no, "expected header 'dta <num-states> root <id>'");
                return outcome;
            }
            std::string_view rest = line.substr(4);
            std::size_t sep = rest.find(' ');
            if (sep == std::string_view::npos || !rest.substr(sep + 1).starts_with("root ")) {
                malformed(line_no, "expected header 'dta <num-states> root <id>'");
                return outcome;
            }
            auto n = parse_number(rest.substr(0, sep));
            auto r = parse_number(rest.substr(sep + 6));
            if (!n || !r) {
                malformed(line_no, "header counts must be non-negative integers");
                return outcome;
            }
            num_states = n;
            root = r;
            continue;
        }

        if (!finals) {
            if (line != "finals" && !line.starts_with("finals ")) {
                malformed(line_no, "expected 'finals <id> ...' after the header");
                return outcome;
            }
            finals.emplace();
            std::string_view rest = line.size() > 6 ? line.substr(7) : std::string_view{};
            std::size_t at = 0;
            while (at < rest.size()) {
                std::size_t end = rest.find(' ', at);
                if (end == std::string_view::npos) end = rest.size();
                auto id = parse_number(rest.substr(at, end - at));
                if (!id) {
                    malformed(line_no, "final state ids must be non-negative integers");
                    break;
                }
                finals->push_back(static_cast<StateId>(*id));
                at = end + 1;
            }
            continue;
        }

        if (!line.starts_with("t ")) {
            malformed(line_no, "expected transition line 't <from> <symbol> <to>'");
            continue;
        }
        // Positional parse so a space symbol still round-trips: the from
        // field runs to the first space, the to field from the last space,
        // and the symbol is whatever sits between the two separators.
        std::string_view rest = line.substr(2);
        std::size_t from_end = rest.find(' ');
        std::size_t to_start = rest.rfind(' ');
        if (from_end == std::string_view::npos || to_start <= from_end || to_start + 1 > rest.size()) {
            malformed(line_no, "expected 't <from> <symbol> <to>'");
            continue;
        }
        auto from = parse_number(rest.substr(0, from_end));
        auto to = parse_number(rest.substr(to_start + 1));
        std::string_view symbol_field = rest.substr(from_end + 1, to_start - from_end - 1);
        if (!from || !to) {
            malformed(line_no, "state ids must be non-negative integers");
            continue;
        }
        std::u32string symbol;
        try {
            symbol = utf8_decode(symbol_field);
        } catch (const std::runtime_error&) {
            malformed(line_no, "symbol is not valid UTF-8");
            continue;
        }
        if (symbol.size() != 1) {
            malformed(line_no, "symbol must be exactly one character");
            continue;
        }
        raw.push_back({*from, symbol[0], *to});
    }

    if (!num_states) {
        malformed(lines.size() + 1, "missing 'dta' header");
        return outcome;
    }
    if (!finals) {
        malformed(lines.size() + 1, "missing 'finals' line");
        return outcome;
    }
    const std::uint64_t n = *num_states;
    for (const RawTransition& t : raw) {
        if (t.from >= n) {
            malformed(0, "transition source " + std::to_string(t.from) + " out of range");
        }
    }
    if (!outcome.violations.empty()) return outcome;

    std::set<char32_t> chars;
    for (const RawTransition& t : raw) chars.insert(t.symbol);
    Alphabet alphabet;
    for (char32_t c : chars) alphabet.intern(c);

    std::vector<std::vector<Transition>> children(n);
    for (const RawTransition& t : raw) {
        SymbolId symbol = *alphabet.find(t.symbol);
        // Out-of-range targets are clamped into a sentinel the validator
        // reports as DanglingState rather than silently dropped.
        StateId to = t.to < n ? static_cast<StateId>(t.to) : static_cast<StateId>(n);
        children[t.from].push_back({symbol, to});
    }
    for (auto& ts : children) {
        std::stable_sort(ts.begin(), ts.end(),
                         [](const Transition& a, const Transition& b) { return a.symbol < b.symbol; });
    }
    Dta dta(std::move(alphabet), std::move(children), static_cast<StateId>(*root),
            *finals);
    outcome.violations = validate(dta);
    if (outcome.violations.empty()) outcome.dta = std::move(dta);
    return outcome;
}

std::vector<std::u32string> parse_word_list(std::string_view text) {
    std::vector<std::string_view> lines = split_lines(text);
    if (lines.empty()) {
        throw std::runtime_error("word list is empty: expected at least one line");
    }
    std::vector<std::u32string> words;
    words.reserve(lines.size());
    for (std::string_view line : lines) words.push_back(utf8_decode(line));
    return words;
}

std::string format_word_list(const std::vector<std::u32string>& words) {
    std::string out;
    for (const auto& word : words) {
        out += utf8_encode(word);
        out += '\n';
    }
    return out;
}

namespace {

std::string dot_escape(std::string_view raw) {
    std::string out;
    for (char c : raw) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string export_dot(const Dta& dta, const DotOverlay* overlay) {
    std::string out = "digraph dta {\n  rankdir=LR;\n  node [shape=circle];\n";
    auto is_anchor = [&](StateId q) {
        return overlay &&
               std::find(overlay->anchors.begin(), overlay->anchors.end(), q) != overlay->anchors.end();
    };
    for (StateId q = 0; q < dta.num_states(); ++q) {
        out += "  n" + std::to_string(q) + " [label=\"" + std::to_string(q) + "\"";
        if (dta.is_final(q)) out += ", shape=doublecircle";
        if (is_anchor(q)) out += ", style=filled, fillcolor=lightblue";
        out += "];\n";
    }
    for (StateId q = 0; q < dta.num_states(); ++q) {
        for (const Transition& t : dta.children(q)) {
            out += "  n" + std::to_string(q) + " -> n" + std::to_string(t.to) + " [label=\"" +
                   dot_escape(utf8_encode(dta.alphabet().display(t.symbol))) + "\"";
            if (overlay && t.to < overlay->edge_covered.size() && overlay->edge_covered[t.to]) {
                out += ", color=blue, penwidth=2";
            }
            out += "];\n";
        }
    }
    out += "}\n";
    return out;
}

}  // namespace covertrie
