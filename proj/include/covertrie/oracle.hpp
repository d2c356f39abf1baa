#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "covertrie/word.hpp"

namespace covertrie::oracle {

/// Reference implementations of the classical string-cover notions, kept
/// deliberately naive and independent of the automaton machinery so they
/// can serve as cross-validation oracles in tests. Everything here works
/// by direct definition-chasing; nothing is shared with the tree-based
/// algorithms.

/// Start positions of every occurrence of pattern in text, ascending.
/// An empty pattern occurs at every position 0..|text|.
std::vector<std::size_t> occurrences(const Word& pattern, const Word& text);

/// True iff copies of `cover` placed at its occurrences in `text` overlap
/// or abut so that every letter of `text` lies under at least one copy.
/// The empty word covers only the empty text.
bool naive_covers(const Word& cover, const Word& text);

/// Every prefix of `word` that is also a suffix of it, ascending by length.
/// Includes the word itself (the trivial border) but not the empty word.
/// Quadratic by design.
std::vector<Word> naive_borders(const Word& word);

/// The shortest cover of a single word: scans prefixes in increasing
/// length, which is exhaustive because any cover must occur at position 0.
Word naive_shortest_cover(const Word& word);

/// The shortest word covering every word of the set, or nullopt when no
/// common cover exists. Candidates are the prefixes of a shortest input
/// word, again because a common cover is a prefix of every input.
std::optional<Word> naive_shortest_common_cover(const std::vector<Word>& words);

/// All words of length <= max_len covered by `cover`, sorted by length
/// then lexicographically by symbol id. Generated by chaining occurrences
/// left to right (consecutive starts at distance 1..|cover| with matching
/// overlap) and certified against naive_covers. Throws std::runtime_error
/// if more than `guard` words would be produced.
std::vector<Word> enumerate_covered_language(const Word& cover, std::size_t max_len,
                                             std::size_t guard = 1000000);

}  // namespace covertrie::oracle
