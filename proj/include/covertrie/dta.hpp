#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covertrie/word.hpp"

namespace covertrie {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = 0xffffffffu;

struct Transition {
    SymbolId symbol;
    StateId to;
    bool operator==(const Transition&) const = default;
};

class EmptyLanguage : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Acceptor of a finite word language whose transition graph is a rooted,
/// edge-labeled tree: at most one child per (state, symbol), every non-root
/// state has exactly one incoming transition, and every leaf is final
/// (trimmed). Construction does not enforce the invariants — validate()
/// reports them — so malformed instances can be built and inspected in
/// diagnostics and tests. Immutable once constructed; safe to share across
/// threads.
class Dta {
public:
    /// Raw assembly from parts. children[q] must be sorted by symbol id;
    /// no invariant checking happens here.
    Dta(Alphabet alphabet, std::vector<std::vector<Transition>> children, StateId root,
        std::vector<StateId> finals);

    std::size_t num_states() const { return children_.size(); }
    StateId root() const { return root_; }
    const Alphabet& alphabet() const { return alphabet_; }

    std::span<const Transition> children(StateId q) const {
        return children_[q];
    }
    bool is_leaf(StateId q) const { return children_[q].empty(); }

    /// Child reached from q on symbol, if the transition exists.
    std::optional<StateId> child(StateId q, SymbolId symbol) const;

    bool is_final(StateId q) const { return q < final_mask_.size() && final_mask_[q] != 0; }
    const std::vector<StateId>& finals() const { return finals_; }

    std::size_t num_transitions() const;

    bool operator==(const Dta&) const = default;

private:
    Alphabet alphabet_;
    std::vector<std::vector<Transition>> children_;
    StateId root_ = 0;
    std::vector<StateId> finals_;       // sorted ascending
    std::vector<std::uint8_t> final_mask_;
};

enum class ViolationKind {
    EmptyAutomaton,    // no states at all
    BadRoot,           // root id out of range
    DanglingState,     // transition endpoint out of range
    RootIndegree,      // a transition enters the root
    MultipleParents,   // a state has more than one incoming transition
    UnreachableState,  // not reachable from the root (covers stray cycles)
    Nondeterministic,  // two transitions from one state on the same symbol
    NonFinalLeaf,      // childless state that is not final
    SymbolOutOfRange,  // transition symbol not in the alphabet
    BadFinal,          // final id out of range
    MalformedLine,     // text-format parse error
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

const char* violation_kind_name(ViolationKind kind);

/// Checks every structural invariant; returns the full violation list
/// (empty means the automaton is valid). Never throws, never aborts.
std::vector<Violation> validate(const Dta& dta);

/// Parent/level index of a valid Dta, used by traversals. levels[d] lists
/// the states at depth d in ascending id order.
struct TreeIndex {
    std::vector<StateId> parent;        // kNoState for the root
    std::vector<SymbolId> parent_symbol;
    std::vector<std::uint32_t> node_depth;
    std::vector<std::vector<StateId>> levels;

    explicit TreeIndex(const Dta& dta);
};

/// The unique trimmed acceptor of {word}: |word|+1 states along a path,
/// only the last state final. The empty word yields a single final root.
Dta path_automaton(const Word& word, Alphabet alphabet);

/// Trimmed acceptor of L(dta) ∪ {word}: shares the longest common prefix
/// path and extends or re-marks a final state.
Dta insert_word(const Dta& dta, const Word& word);

/// The unique trimmed tree acceptor of the given word set. Duplicates are
/// deduplicated; an empty list is rejected (the empty language has no
/// trimmed acceptor). The result does not depend on word order.
Dta build_trie(const std::vector<Word>& words, Alphabet alphabet);

bool accepts(const Dta& dta, const Word& word);

/// All accepted words, sorted by length then lexicographically by display
/// character. One word per final state.
std::vector<Word> enumerate_language(const Dta& dta);

/// Length of the longest root-to-leaf path == longest accepted word.
std::size_t depth(const Dta& dta);

/// Rebuilds the automaton over another alphabet that contains (at least)
/// every display character the automaton uses; nullopt if one is missing.
std::optional<Dta> remap_alphabet(const Dta& dta, const Alphabet& target);

}  // namespace covertrie
