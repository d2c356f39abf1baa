#include "covertrie/dta.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace covertrie {

Dta::Dta(Alphabet alphabet, std::vector<std::vector<Transition>> children, StateId root,
         std::vector<StateId> finals)
    : alphabet_(std::move(alphabet)),
      children_(std::move(children)),
      root_(root),
      finals_(std::move(finals)) {
    std::sort(finals_.begin(), finals_.end());
    finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
    final_mask_.assign(children_.size(), 0);
    for (StateId q : finals_) {
        if (q < final_mask_.size()) final_mask_[q] = 1;
    }
}

std::optional<StateId> Dta::child(StateId q, SymbolId symbol) const {
    const auto& ts = children_[q];
    auto it = std::lower_bound(ts.begin(), ts.end(), symbol,
                               [](const Transition& t, SymbolId s) { return t.symbol < s; });
    if (it != ts.end() && it->symbol == symbol) return it->to;
    return std::nullopt;
}

std::size_t Dta::num_transitions() const {
    std::size_t n = 0;
    for (const auto& ts : children_) n += ts.size();
    return n;
}

const char* violation_kind_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::EmptyAutomaton: return "EmptyAutomaton";
        case ViolationKind::BadRoot: return "BadRoot";
        case ViolationKind::DanglingState: return "DanglingState";
        case ViolationKind::RootIndegree: return "RootIndegree";
        case ViolationKind::MultipleParents: return "MultipleParents";
        case ViolationKind::UnreachableState: return "UnreachableState";
        case ViolationKind::Nondeterministic: return "Nondeterministic";
        case ViolationKind::NonFinalLeaf: return "NonFinalLeaf";
        case ViolationKind::SymbolOutOfRange: return "SymbolOutOfRange";
        case ViolationKind::BadFinal: return "BadFinal";
        case ViolationKind::MalformedLine: return "MalformedLine";
    }
    return "Unknown";
}

std::vector<Violation> validate(const Dta& dta) {
    std::vector<Violation> out;
    const std::size_t n = dta.num_states();
    if (n == 0) {
        out.push_back({ViolationKind::EmptyAutomaton, "automaton has no states"});
        return out;
    }
    if (dta.root() >= n) {
        out.push_back({ViolationKind::BadRoot,
                       "root id " + std::to_string(dta.root()) + " out of range"});
        return out;
    }

    std::vector<std::uint32_t> indegree(n, 0);
    bool endpoints_ok = true;
    for (StateId q = 0; q < n; ++q) {
        SymbolId prev_symbol = 0;
        bool first = true;
        for (const Transition& t : dta.children(q)) {
            if (t.to >= n) {
                out.push_back({ViolationKind::DanglingState,
                               "transition from " + std::to_string(q) + " targets missing state " +
                                   std::to_string(t.to)});
                endpoints_ok = false;
                continue;
            }
            if (t.symbol >= dta.alphabet().size()) {
                out.push_back({ViolationKind::SymbolOutOfRange,
                               "transition from " + std::to_string(q) + " uses symbol id " +
                                   std::to_string(t.symbol) + " outside the alphabet"});
            }
            if (!first && t.symbol == prev_symbol) {
                out.push_back({ViolationKind::Nondeterministic,
                               "state " + std::to_string(q) + " has two transitions on symbol id " +
                                   std::to_string(t.symbol)});
            }
            prev_symbol = t.symbol;
            first = false;
            indegree[t.to] += 1;
        }
    }

    if (indegree[dta.root()] > 0) {
        out.push_back({ViolationKind::RootIndegree,
                       "root " + std::to_string(dta.root()) + " has an incoming transition"});
    }
    for (StateId q = 0; q < n; ++q) {
        if (q != dta.root() && indegree[q] > 1) {
            out.push_back({ViolationKind::MultipleParents,
                           "state " + std::to_string(q) + " has " + std::to_string(indegree[q]) +
                               " incoming transitions"});
        }
    }

    if (endpoints_ok) {
        std::vector<std::uint8_t> seen(n, 0);
        std::queue<StateId> queue;
        queue.push(dta.root());
        seen[dta.root()] = 1;
        while (!queue.empty()) {
            StateId q = queue.front();
            queue.pop();
            for (const Transition& t : dta.children(q)) {
                if (!seen[t.to]) {
                    seen[t.to] = 1;
                    queue.push(t.to);
                }
            }
        }
        for (StateId q = 0; q < n; ++q) {
            if (!seen[q]) {
                out.push_back({ViolationKind::UnreachableState,
                               "state " + std::to_string(q) + " is unreachable from the root"});
            }
        }
    }

    for (StateId q : dta.finals()) {
        if (q >= n) {
            out.push_back({ViolationKind::BadFinal,
                           "final state id " + std::to_string(q) + " out of range"});
        }
    }
    for (StateId q = 0; q < n; ++q) {
        if (dta.is_leaf(q) && !dta.is_final(q)) {
            out.push_back({ViolationKind::NonFinalLeaf,
                           "leaf state " + std::to_string(q) + " is not final"});
        }
    }
    return out;
}

TreeIndex::TreeIndex(const Dta& dta) {
    const std::size_t n = dta.num_states();
    parent.assign(n, kNoState);
    parent_symbol.assign(n, 0);
    node_depth.assign(n, 0);
    std::queue<StateId> queue;
    queue.push(dta.root());
    std::uint32_t max_depth = 0;
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop();
        max_depth = std::max(max_depth, node_depth[q]);
        for (const Transition& t : dta.children(q)) {
            parent[t.to] = q;
            parent_symbol[t.to] = t.symbol;
            node_depth[t.to] = node_depth[q] + 1;
            queue.push(t.to);
        }
    }
    levels.assign(max_depth + 1, {});
    for (StateId q = 0; q < n; ++q) levels[node_depth[q]].push_back(q);
    for (auto& level : levels) std::sort(level.begin(), level.end());
}

Dta path_automaton(const Word& word, Alphabet alphabet) {
    std::vector<std::vector<Transition>> children(word.size() + 1);
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] >= alphabet.size()) {
            throw AlphabetMismatch("word symbol id " + std::to_string(word[i]) +
                                   " is not in the alphabet");
        }
        children[i].push_back({word[i], static_cast<StateId>(i + 1)});
    }
    return Dta(std::move(alphabet), std::move(children),
               /*root=*/0, {static_cast<StateId>(word.size())});
}

namespace {

// Mutable trie node used while building; frozen into a Dta afterwards so
// the public type stays immutable.
struct BuildNode {
    std::map<SymbolId, std::uint32_t> children;
    bool final = false;
};

// Freezes the scratch trie into preorder numbering, visiting children in
// ascending display-character order. The numbering therefore depends only
// on the displayed tree, not on insertion order or symbol interning order,
// which is what makes equal-language tries compare equal.
Dta freeze(const std::vector<BuildNode>& nodes, const Alphabet& alphabet) {
    std::vector<StateId> renumber(nodes.size(), kNoState);
    std::vector<StateId> order;
    order.reserve(nodes.size());
    std::vector<std::uint32_t> stack = {0};
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        renumber[u] = static_cast<StateId>(order.size());
        order.push_back(u);
        std::vector<std::pair<char32_t, std::uint32_t>> kids;
        kids.reserve(nodes[u].children.size());
        for (auto [symbol, v] : nodes[u].children) kids.push_back({alphabet.display(symbol), v});
        std::sort(kids.begin(), kids.end());
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(it->second);
    }

    std::vector<std::vector<Transition>> children(nodes.size());
    std::vector<StateId> finals;
    for (std::uint32_t u = 0; u < nodes.size(); ++u) {
        StateId q = renumber[u];
        auto& ts = children[q];
        for (auto [symbol, v] : nodes[u].children) ts.push_back({symbol, renumber[v]});
        std::sort(ts.begin(), ts.end(),
                  [](const Transition& a, const Transition& b) { return a.symbol < b.symbol; });
        if (nodes[u].final) finals.push_back(q);
    }
    return Dta(alphabet, std::move(children), /*root=*/0, std::move(finals));
}

}  // namespace

Dta build_trie(const std::vector<Word>& words, Alphabet alphabet) {
    if (words.empty()) {
        throw EmptyLanguage("cannot build an acceptor for the empty language");
    }
    std::vector<BuildNode> nodes(1);
    for (const Word& word : words) {
        std::uint32_t at = 0;
        for (SymbolId symbol : word) {
            if (symbol >= alphabet.size()) {
                throw AlphabetMismatch("word symbol id " + std::to_string(symbol) +
                                       " is not in the alphabet");
            }
            auto it = nodes[at].children.find(symbol);
            if (it == nodes[at].children.end()) {
                std::uint32_t fresh = static_cast<std::uint32_t>(nodes.size());
                nodes[at].children.emplace(symbol, fresh);
                nodes.push_back({});
                at = fresh;
            } else {
                at = it->second;
            }
        }
        nodes[at].final = true;
    }
    return freeze(nodes, alphabet);
}

Dta insert_word(const Dta& dta, const Word& word) {
    std::vector<Word> words = enumerate_language(dta);
    words.push_back(word);
    return build_trie(words, dta.alphabet());
}

bool accepts(const Dta& dta, const Word& word) {
    StateId q = dta.root();
    for (SymbolId symbol : word) {
        auto next = dta.child(q, symbol);
        if (!next) return false;
        q = *next;
    }
    return dta.is_final(q);
}

std::vector<Word> enumerate_language(const Dta& dta) {
    std::vector<Word> out;
    Word prefix;
    // Depth-first in display order yields display-lexicographic output per
    // length bucket once stably partitioned below.
    auto walk = [&](auto&& self, StateId q) -> void {
        if (dta.is_final(q)) out.push_back(prefix);
        std::vector<std::pair<char32_t, Transition>> kids;
        for (const Transition& t : dta.children(q)) {
            kids.push_back({dta.alphabet().display(t.symbol), t});
        }
        std::sort(kids.begin(), kids.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [display, t] : kids) {
            prefix.push_back(t.symbol);
            self(self, t.to);
            prefix.pop_back();
        }
    };
    walk(walk, dta.root());
    std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.size() < b.size();
    });
    return out;
}

std::size_t depth(const Dta& dta) {
    std::size_t best = 0;
    std::vector<std::pair<StateId, std::size_t>> stack = {{dta.root(), 0}};
    while (!stack.empty()) {
        auto [q, d] = stack.back();
        stack.pop_back();
        best = std::max(best, d);
        for (const Transition& t : dta.children(q)) stack.push_back({t.to, d + 1});
    }
    return best;
}

std::optional<Dta> remap_alphabet(const Dta& dta, const Alphabet& target) {
    // Only symbols that actually label a transition matter; unused entries
    // of the source alphabet do not constrain the target.
    constexpr SymbolId kUnmapped = std::numeric_limits<SymbolId>::max();
    std::vector<SymbolId> map(dta.alphabet().size(), kUnmapped);
    std::vector<std::vector<Transition>> children(dta.num_states());
    for (StateId q = 0; q < dta.num_states(); ++q) {
        for (const Transition& t : dta.children(q)) {
            if (map[t.symbol] == kUnmapped) {
                auto found = target.find(dta.alphabet().display(t.symbol));
                if (!found) return std::nullopt;
                map[t.symbol] = *found;
            }
            children[q].push_back({map[t.symbol], t.to});
        }
        std::sort(children[q].begin(), children[q].end(),
                  [](const Transition& a, const Transition& b) { return a.symbol < b.symbol; });
    }
    return Dta(target, std::move(children), dta.root(), dta.finals());
}

}  // namespace covertrie
