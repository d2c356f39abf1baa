#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "covertrie/dta.hpp"
#include "covertrie/recognition.hpp"

namespace covertrie {

/// Cost functional for cover minimization. eval may return nullopt to
/// declare a candidate inadmissible regardless of cost.
struct Objective {
    std::string name;
    std::function<std::optional<double>(const Dta&)> eval;

    static Objective state_count();
    /// Longest accepted word; for path automata this is the word length.
    static Objective depth();
};

struct MinimizeOutcome {
    std::optional<Dta> best;               // cheapest admissible cover found
    std::optional<double> value;           // its objective value
    std::optional<OccurrenceSet> witness;  // its occurrences in the target
    std::size_t candidates_seen = 0;       // candidates supplied
    std::size_t candidates_checked = 0;    // cover decisions actually run
    std::vector<std::string> warnings;
};

/// Exhaustive minimization: among the candidates that cover `target` in
/// the given mode, returns the one with the least objective value, ties
/// broken toward the lexicographically smallest canonical text so the
/// result is independent of candidate order. Candidates over a different
/// alphabet are remapped onto the target's; ones using symbols the target
/// lacks cannot cover it and are skipped with a warning, as are candidates
/// the objective declines. With size_prefilter, candidates with more
/// states than the target are dropped without running the decision, since
/// an embedding is injective; disabling the filter never changes the
/// result. Throws std::invalid_argument on an empty candidate list.
MinimizeOutcome minimize_over(const std::vector<Dta>& candidates, const Objective& objective,
                              const Dta& target, CoverMode mode = CoverMode::EdgeCoverage,
                              bool size_prefilter = true);

/// Candidate stream for randomized search. draw returns nullopt when the
/// source is exhausted; threshold is the acceptance bar: the search stops
/// at the first cover whose objective value is at or below it (any cover
/// qualifies when the threshold is unset).
struct CandidateGenerator {
    std::function<std::optional<Dta>()> draw;
    std::size_t max_iterations = 1000;
    std::optional<double> threshold;
};

/// Draws up to max_iterations candidates and returns the first one that
/// covers `target` and meets the threshold. A candidate that throws or a
/// drained generator ends the search early with a diagnostic warning; an
/// empty `best` means the search was exhausted.
MinimizeOutcome randomized_minimize(CandidateGenerator& generator, const Objective& objective,
                                    const Dta& target, CoverMode mode = CoverMode::EdgeCoverage);

/// Path automata of the non-empty prefixes of the first shortest accepted
/// word, shortest first, each over the automaton's alphabet. Complete for
/// edge-coverage minimization among path covers: a path covering every
/// accepted word occurs at position 0 of each, hence is a common prefix,
/// hence a prefix of a shortest one. Restricting to paths whose last node
/// is final in the target would be wrong: over {ababa, abaaba} the only
/// common cover is aba, and neither word ends with it. When only the
/// empty word is accepted the list is empty.
std::vector<Dta> path_candidates(const Dta& dta);

struct SccOptions {
    CoverMode mode = CoverMode::EdgeCoverage;
    /// Skip candidate lengths that are not borders of the shortest word
    /// (its own length always stays); a cover of a word is both a prefix
    /// and a suffix of it. Computed with the classical failure function.
    bool border_prefilter = true;
};

struct SccResult {
    std::optional<Word> cover;           // nullopt when no common cover exists
    std::size_t candidates_total = 0;    // path candidates before filtering
    std::size_t candidates_checked = 0;  // cover decisions actually run
};

/// Shortest word whose path automaton covers the trie of `words`, found
/// by minimizing depth over the path candidates. Under edge coverage this
/// is the exact shortest common cover of the word set in the classical
/// string sense; under node coverage the search runs over the same
/// candidate set against the weaker blanket. Throws std::invalid_argument
/// when the list is empty or contains the empty word.
SccResult shortest_common_cover(const std::vector<Word>& words, const Alphabet& alphabet,
                                const SccOptions& options = {});

/// Shortest cover of a single non-empty word; always succeeds because a
/// word covers itself. Throws std::invalid_argument on the empty word.
Word shortest_cover(const Word& word, const Alphabet& alphabet, const SccOptions& options = {});

}  // namespace covertrie
