#include "covertrie/minimize.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "covertrie/io.hpp"

namespace covertrie {

namespace {

/// Keeps the cheapest admissible cover seen so far; ties on the value fall
/// back to the canonical text so the winner is order-independent.
struct BestTracker {
    std::optional<Dta> best;
    std::optional<double> value;
    std::optional<OccurrenceSet> witness;
    std::string best_text;

    void offer(Dta candidate, double candidate_value, OccurrenceSet candidate_witness) {
        std::string text = canonical_serialize(candidate);
        bool take;
        if (!best) {
            take = true;
        } else if (candidate_value != *value) {
            take = candidate_value < *value;
        } else {
            take = text < best_text;
        }
        if (take) {
            best = std::move(candidate);
            value = candidate_value;
            witness = std::move(candidate_witness);
            best_text = std::move(text);
        }
    }
};

/// Proper border lengths of a word, ascending, via the failure function.
std::vector<std::size_t> proper_border_lengths(const Word& word) {
    const std::size_t n = word.size();
    std::vector<std::size_t> fail(n + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (k > 0 && word[i] != word[k]) k = fail[k];
        if (word[i] == word[k]) ++k;
        fail[i + 1] = k;
    }
    std::vector<std::size_t> lengths;
    for (std::size_t b = fail[n]; b > 0; b = fail[b]) lengths.push_back(b);
    std::reverse(lengths.begin(), lengths.end());
    return lengths;
}

}  // namespace

Objective Objective::state_count() {
    return {"state_count", [](const Dta& dta) -> std::optional<double> {
                return static_cast<double>(dta.num_states());
            }};
}

Objective Objective::depth() {
    return {"depth", [](const Dta& dta) -> std::optional<double> {
                return static_cast<double>(covertrie::depth(dta));
            }};
}

MinimizeOutcome minimize_over(const std::vector<Dta>& candidates, const Objective& objective,
                              const Dta& target, CoverMode mode, bool size_prefilter) {
    if (candidates.empty()) {
        throw std::invalid_argument("cover minimization requires at least one candidate");
    }
    MinimizeOutcome out;
    BestTracker tracker;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        out.candidates_seen += 1;
        const Dta& raw = candidates[i];
        // An embedding is injective, so a larger candidate can never cover.
        if (size_prefilter && raw.num_states() > target.num_states()) continue;
        std::optional<Dta> candidate = remap_alphabet(raw, target.alphabet());
        if (!candidate) {
            out.warnings.push_back("candidate " + std::to_string(i) +
                                   " skipped: uses symbols the target alphabet lacks");
            continue;
        }
        std::optional<double> value = objective.eval(*candidate);
        if (!value) {
            out.warnings.push_back("candidate " + std::to_string(i) +
                                   " skipped: declined by objective " + objective.name);
            continue;
        }
        out.candidates_checked += 1;
        CoverOutcome decision = covers(*candidate, target, mode);
        if (!decision.covered) continue;
        tracker.offer(std::move(*candidate), *value, std::move(*decision.witness));
    }
    out.best = std::move(tracker.best);
    out.value = tracker.value;
    out.witness = std::move(tracker.witness);
    return out;
}

MinimizeOutcome randomized_minimize(CandidateGenerator& generator, const Objective& objective,
                                    const Dta& target, CoverMode mode) {
    MinimizeOutcome out;
    for (std::size_t iteration = 0; iteration < generator.max_iterations; ++iteration) {
        std::optional<Dta> drawn;
        try {
            drawn = generator.draw();
        } catch (const std::exception& e) {
            out.warnings.push_back(std::string("candidate generator failed: ") + e.what());
            break;
        }
        if (!drawn) {
            out.warnings.push_back("candidate generator ran out of candidates");
            break;
        }
        out.candidates_seen += 1;
        if (drawn->num_states() > target.num_states()) continue;
        std::optional<Dta> candidate = remap_alphabet(*drawn, target.alphabet());
        if (!candidate) continue;
        std::optional<double> value = objective.eval(*candidate);
        if (!value) continue;
        if (generator.threshold && *value > *generator.threshold) continue;
        out.candidates_checked += 1;
        CoverOutcome decision = covers(*candidate, target, mode);
        if (!decision.covered) continue;
        out.best = std::move(*candidate);
        out.value = *value;
        out.witness = std::move(*decision.witness);
        return out;
    }
    out.warnings.push_back("no qualifying cover within " +
                           std::to_string(generator.max_iterations) + " draws");
    return out;
}

std::vector<Dta> path_candidates(const Dta& dta) {
    std::vector<Word> words = enumerate_language(dta);
    if (words.empty()) {
        throw EmptyLanguage("path candidates need an automaton accepting at least one word");
    }
    const Word& shortest = words.front();  // enumeration is length-first
    std::vector<Dta> out;
    out.reserve(shortest.size());
    for (std::size_t l = 1; l <= shortest.size(); ++l) {
        out.push_back(path_automaton(Word(shortest.begin(), shortest.begin() + l),
                                     dta.alphabet()));
    }
    return out;
}

SccResult shortest_common_cover(const std::vector<Word>& words, const Alphabet& alphabet,
                                const SccOptions& options) {
    if (words.empty()) {
        throw std::invalid_argument("shortest common cover requires at least one word");
    }
    for (const Word& w : words) {
        if (w.empty()) {
            throw std::invalid_argument("shortest common cover is undefined for the empty word");
        }
    }
    Dta trie = build_trie(words, alphabet);
    std::vector<Dta> candidates = path_candidates(trie);

    SccResult result;
    result.candidates_total = candidates.size();

    std::vector<Dta> pool;
    if (options.border_prefilter) {
        // A cover of a word is both a prefix and a suffix of it, so only
        // borders of the shortest word can win. The filter never empties
        // the pool: the word itself is its own (trivial) border.
        const Word shortest_word = enumerate_language(trie).front();
        std::vector<std::size_t> keep = proper_border_lengths(shortest_word);
        keep.push_back(shortest_word.size());
        pool.reserve(keep.size());
        for (std::size_t l : keep) pool.push_back(std::move(candidates[l - 1]));
    } else {
        pool = std::move(candidates);
    }

    MinimizeOutcome minimized = minimize_over(pool, Objective::depth(), trie, options.mode);
    result.candidates_checked = minimized.candidates_checked;
    if (minimized.best) result.cover = enumerate_language(*minimized.best).front();
    return result;
}

Word shortest_cover(const Word& word, const Alphabet& alphabet, const SccOptions& options) {
    if (word.empty()) {
        throw std::invalid_argument("shortest cover is undefined for the empty word");
    }
    SccResult result = shortest_common_cover(std::vector<Word>{word}, alphabet, options);
    if (!result.cover) {
        throw std::runtime_error("shortest cover search failed on a self-covering word");
    }
    return *result.cover;
}

}  // namespace covertrie
