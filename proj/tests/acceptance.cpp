// Acceptance gate: ten end-to-end checks over the whole library and the
// command-line front end, each printing one PASS or FAIL line. The exit
// code is the number of failed checks, so a zero exit means the build
// meets the contract.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "covertrie/io.hpp"
#include "covertrie/minimize.hpp"
#include "covertrie/oracle.hpp"
#include "covertrie/order.hpp"
#include "covertrie/recognition.hpp"
#include "testutil.hpp"

using namespace covertrie;
using namespace testutil;

namespace {

struct Checker {
    std::uint64_t bad = 0;
    std::uint64_t total = 0;
    std::string first_detail;

    void expect(bool ok, const std::string& detail) {
        ++total;
        if (!ok) {
            if (bad == 0) first_detail = detail;
            ++bad;
        }
    }

    bool ok() const { return bad == 0; }

    std::string summary() const {
        if (ok()) return "";
        std::ostringstream s;
        s << bad << " of " << total << " checks failed; first: " << first_detail;
        return s.str();
    }
};

int failures = 0;

void verdict(int index, const std::string& name, const Checker& checker) {
    std::cout << (checker.ok() ? "PASS" : "FAIL") << " " << index << "/10 " << name;
    if (!checker.ok()) std::cout << " (" << checker.summary() << ")";
    std::cout << std::endl;
    if (!checker.ok()) ++failures;
}

Alphabet alphabet_for(SymbolId sigma) { return sigma == 2 ? ab() : abc(); }

bool outcomes_identical(const CoverOutcome& a, const CoverOutcome& b) {
    return a.covered == b.covered && a.mode == b.mode && a.availability == b.availability &&
           a.pruned == b.pruned && a.witness == b.witness && a.failure == b.failure &&
           a.stats.basic_steps == b.stats.basic_steps &&
           a.stats.parallel_rounds == b.stats.parallel_rounds &&
           a.stats.messages == b.stats.messages && a.stats.round_steps == b.stats.round_steps;
}

struct CoveredFamily {
    Word base;
    std::vector<Word> words;
    Alphabet alphabet;
    bool certified = true;
};

CoveredFamily random_covered_family(std::mt19937_64& rng) {
    SymbolId sigma = 2 + rng() % 2;
    CoveredFamily family{Word{}, {}, alphabet_for(sigma)};
    family.base = random_word(rng, sigma, 1 + rng() % 6);
    std::size_t count = 1 + rng() % 8;
    for (std::size_t i = 0; i < count; ++i) {
        Word w = covered_extension(rng, family.base, 24);
        if (!oracle::naive_covers(family.base, w)) family.certified = false;
        family.words.push_back(std::move(w));
    }
    return family;
}

// ---------------------------------------------------------------------

Checker check_string_cover_agreement() {
    Checker c;
    std::mt19937_64 rng(101);
    auto begin = std::chrono::steady_clock::now();
    for (int trial = 0; trial < 10000; ++trial) {
        SymbolId sigma = 2 + rng() % 2;
        Alphabet a = alphabet_for(sigma);
        Word s = random_word(rng, sigma, 1 + rng() % 6);
        Word w = random_word(rng, sigma, rng() % 25);
        bool expected = oracle::naive_covers(s, w);
        bool got = covers(path_automaton(s, a), path_automaton(w, a),
                          CoverMode::EdgeCoverage).covered;
        c.expect(got == expected, "disagreement on pair " + std::to_string(trial));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    c.expect(secs < 10.0, "suite took " + std::to_string(secs) + " s, budget is 10 s");
    return c;
}

Checker check_covered_sets_both_modes() {
    Checker c;
    std::mt19937_64 rng(102);
    for (int trial = 0; trial < 1000; ++trial) {
        CoveredFamily family = random_covered_family(rng);
        c.expect(family.certified, "generator produced an uncovered word in set " +
                                       std::to_string(trial));
        Dta cover = path_automaton(family.base, family.alphabet);
        Dta target = build_trie(family.words, family.alphabet);
        for (CoverMode mode : {CoverMode::EdgeCoverage, CoverMode::NodeCoverage}) {
            c.expect(covers(cover, target, mode).covered,
                     "covered set " + std::to_string(trial) + " rejected");
        }
    }
    return c;
}

Checker check_mode_separation_fixture() {
    Checker c;
    Alphabet a = ab();
    Dta cover = path_automaton(enc(a, U"aba"), a);
    Dta target = path_automaton(enc(a, U"abaaaba"), a);

    CoverOutcome node = covers(cover, target, CoverMode::NodeCoverage);
    c.expect(node.covered, "node coverage rejected aba over abaaaba");
    c.expect(node.witness && node.witness->anchors == std::vector<StateId>{0, 4},
             "node anchors are not {0, 4}");

    CoverOutcome edge = covers(cover, target, CoverMode::EdgeCoverage);
    c.expect(!edge.covered, "edge coverage accepted aba over abaaaba");
    c.expect(edge.failure && edge.failure->kind == FailureKind::UncoveredEdge,
             "edge failure is not UncoveredEdge");
    c.expect(edge.failure && edge.failure->node == 4,
             "edge failure is not at the fourth node");

    BruteForceResult node_oracle = brute_force_covers(cover, target, CoverMode::NodeCoverage);
    BruteForceResult edge_oracle = brute_force_covers(cover, target, CoverMode::EdgeCoverage);
    c.expect(node_oracle.covered, "embedding-search oracle rejects node coverage");
    c.expect(!edge_oracle.covered, "embedding-search oracle accepts edge coverage");
    return c;
}

Checker check_scc_oracle_agreement() {
    Checker c;
    std::mt19937_64 rng(104);
    for (int trial = 0; trial < 1000; ++trial) {
        CoveredFamily family = random_covered_family(rng);
        c.expect(family.certified, "uncertified family " + std::to_string(trial));
        std::optional<Word> expected = oracle::naive_shortest_common_cover(family.words);
        SccResult got = shortest_common_cover(family.words, family.alphabet);
        c.expect(got.cover == expected,
                 "covered family " + std::to_string(trial) + " disagrees with the oracle");
    }
    // Adversarial shape: shared prefixes, then distinct letters that occur
    // nowhere else, so no candidate can end both branches.
    Alphabet wide = Alphabet::collect({U"abcd"});
    for (int trial = 0; trial < 200; ++trial) {
        Word base = random_word(rng, 2, 1 + rng() % 4);
        Word first = covered_extension(rng, base, 16);
        Word second = covered_extension(rng, base, 16);
        first.push_back(2);
        second.push_back(3);
        std::vector<Word> words = {first, second};
        std::optional<Word> expected = oracle::naive_shortest_common_cover(words);
        SccResult got = shortest_common_cover(words, wide);
        c.expect(got.cover == expected,
                 "adversarial family " + std::to_string(trial) + " disagrees with the oracle");
        c.expect(!expected.has_value(),
                 "adversarial family " + std::to_string(trial) + " unexpectedly has a cover");
    }
    Alphabet a = ab();
    SccResult demo = shortest_common_cover(enc_all(a, {U"ababa", U"abaaba"}), a);
    c.expect(demo.cover == enc(a, U"aba"), "demo pair does not yield aba");
    SccResult none = shortest_common_cover(enc_all(wide, {U"abc", U"abd"}), wide);
    c.expect(!none.cover.has_value(), "divergent pair unexpectedly has a cover");
    return c;
}

Checker check_shortest_cover_agreement() {
    Checker c;
    std::mt19937_64 rng(105);
    auto begin = std::chrono::steady_clock::now();
    for (int trial = 0; trial < 10000; ++trial) {
        SymbolId sigma = 2 + rng() % 2;
        Alphabet a = alphabet_for(sigma);
        Word w = random_word(rng, sigma, 1 + rng() % 30);
        c.expect(shortest_cover(w, a) == oracle::naive_shortest_cover(w),
                 "disagreement on word " + std::to_string(trial));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    c.expect(secs < 30.0, "suite took " + std::to_string(secs) + " s, budget is 30 s");
    return c;
}

Checker check_canonical_insertion_order() {
    Checker c;
    std::mt19937_64 rng(106);
    for (int trial = 0; trial < 1000; ++trial) {
        SymbolId sigma = 2 + rng() % 2;
        Alphabet a = alphabet_for(sigma);
        std::vector<Word> words = random_word_set(rng, sigma, 1 + rng() % 5, 8, true);
        std::size_t longest = 0;
        for (const Word& w : words) longest = std::max(longest, w.size());

        Dta reference = build_trie(words, a);
        std::string reference_text = canonical_serialize(reference);
        c.expect(depth(reference) == longest,
                 "depth differs from the longest word in language " + std::to_string(trial));
        for (int perm = 0; perm < 5; ++perm) {
            std::shuffle(words.begin(), words.end(), rng);
            c.expect(canonical_serialize(build_trie(words, a)) == reference_text,
                     "permutation changed the canonical text of language " +
                         std::to_string(trial));
        }
    }
    return c;
}

Checker check_reflexivity_and_composition() {
    Checker c;
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 1000; ++trial) {
        SymbolId sigma = 2 + rng() % 2;
        Alphabet a = alphabet_for(sigma);
        Dta t = build_trie(random_word_set(rng, sigma, 1 + rng() % 4, 6), a);
        CoverOutcome self = covers(t, t, CoverMode::EdgeCoverage);
        c.expect(self.covered, "reflexivity failed on trie " + std::to_string(trial));
        c.expect(self.witness && self.witness->anchors == std::vector<StateId>{t.root()},
                 "reflexive witness is not the root anchor on trie " + std::to_string(trial));
    }
    for (int trial = 0; trial < 1000; ++trial) {
        SymbolId sigma = 2 + rng() % 2;
        Alphabet a = alphabet_for(sigma);
        Word s = random_word(rng, sigma, 1 + rng() % 4);
        Word u = covered_extension(rng, s, 12);
        Word t = covered_extension(rng, u, 30);
        Dta first = path_automaton(s, a);
        Dta mid = path_automaton(u, a);
        Dta last = path_automaton(t, a);
        CoverOutcome w12 = covers(first, mid, CoverMode::EdgeCoverage);
        CoverOutcome w23 = covers(mid, last, CoverMode::EdgeCoverage);
        c.expect(w12.covered && w23.covered,
                 "chain " + std::to_string(trial) + " is not covered linkwise");
        if (!w12.covered || !w23.covered) continue;
        OccurrenceSet composed = compose_witnesses(first, mid, last, *w12.witness, *w23.witness,
                                                   CoverMode::EdgeCoverage);
        c.expect(verify_witness(first, last, composed, CoverMode::EdgeCoverage).ok,
                 "composed witness fails verification on chain " + std::to_string(trial));
    }
    return c;
}

Checker check_engine_equivalence_and_budgets() {
    Checker c;
    std::mt19937_64 rng(108);
    auto meter = [&](const Dta& cover, const Dta& target, CoverMode mode,
                     const std::string& label) {
        CoverOutcome serial = covers(cover, target, mode);
        CoverOutcome parallel = covers_parallel(cover, target, mode);
        c.expect(outcomes_identical(serial, parallel), "engines differ on " + label);
        std::uint64_t step_budget =
            8 * static_cast<std::uint64_t>(cover.num_states()) * target.num_states();
        c.expect(serial.stats.basic_steps <= step_budget, "step budget exceeded on " + label);
        std::uint64_t round_budget = 2 * static_cast<std::uint64_t>(depth(target)) + 2;
        c.expect(serial.stats.parallel_rounds <= round_budget,
                 "round budget exceeded on " + label);
    };

    for (int trial = 0; trial < 10000; ++trial) {
        SymbolId sigma = 2 + rng() % 2;
        Alphabet a = alphabet_for(sigma);
        Word s = random_word(rng, sigma, 1 + rng() % 6);
        Word w = random_word(rng, sigma, rng() % 25);
        meter(path_automaton(s, a), path_automaton(w, a), CoverMode::EdgeCoverage,
              "word pair " + std::to_string(trial));
    }
    for (int trial = 0; trial < 1000; ++trial) {
        CoveredFamily family = random_covered_family(rng);
        Dta cover = path_automaton(family.base, family.alphabet);
        Dta target = build_trie(family.words, family.alphabet);
        for (CoverMode mode : {CoverMode::EdgeCoverage, CoverMode::NodeCoverage}) {
            meter(cover, target, mode, "covered set " + std::to_string(trial));
        }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        SymbolId sigma = 2 + rng() % 2;
        Alphabet a = alphabet_for(sigma);
        Dta cover = build_trie(random_word_set(rng, sigma, 1 + rng() % 3, 4, true), a);
        Dta target = build_trie(random_word_set(rng, sigma, 1 + rng() % 4, 8, true), a);
        for (CoverMode mode : {CoverMode::EdgeCoverage, CoverMode::NodeCoverage}) {
            meter(cover, target, mode, "tree pair " + std::to_string(trial));
        }
    }
    return c;
}

Checker check_covered_language_scenario() {
    Checker c;
    Alphabet a = ab();
    Word aba = enc(a, U"aba");
    std::vector<Word> language = oracle::enumerate_covered_language(aba, 11);
    c.expect(language.size() == 15,
             "language size is " + std::to_string(language.size()) + ", expected 15");

    Dta cover = path_automaton(aba, a);
    Dta trie = build_trie(language, a);
    c.expect(covers(cover, trie, CoverMode::EdgeCoverage).covered,
             "aba does not cover the trie of its covered language");
    SccResult whole = shortest_common_cover(language, a);
    c.expect(whole.cover == aba, "shortest common cover of the language is not aba");

    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Word> subset;
        do {
            subset.clear();
            for (const Word& w : language) {
                if (rng() % 2) subset.push_back(w);
            }
        } while (subset.empty());
        Dta sub_trie = build_trie(subset, a);
        c.expect(covers(cover, sub_trie, CoverMode::EdgeCoverage).covered,
                 "subset " + std::to_string(trial) + " is not covered");
        SccResult sub = shortest_common_cover(subset, a);
        c.expect(sub.cover == aba,
                 "subset " + std::to_string(trial) + " has a different shortest cover");
    }
    return c;
}

Checker check_bench_report() {
    Checker c;
    std::string cmd = std::string(CLI_BIN_PATH) +
                      " bench --seed 11 --instances 40 --scc-sets 20 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    c.expect(pipe != nullptr, "could not start the benchmark");
    if (!pipe) return c;
    std::string out;
    char buffer[4096];
    std::size_t got;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    int status = ::pclose(pipe);
    c.expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "benchmark exit code is not 0");

    std::vector<std::pair<std::string, std::string>> report;
    std::istringstream lines(out);
    std::string line;
    while (std::getline(lines, line)) {
        std::size_t tab = line.find('\t');
        if (tab != std::string::npos) {
            report.emplace_back(line.substr(0, tab), line.substr(tab + 1));
        }
    }
    auto value_of = [&](const std::string& key) -> std::string {
        for (const auto& [k, v] : report) {
            if (k == key) return v;
        }
        return "<missing>";
    };
    auto count_key = [&](const std::string& key) {
        std::size_t n = 0;
        for (const auto& [k, v] : report) {
            if (k == key) ++n;
        }
        return n;
    };

    c.expect(value_of("engine_mismatches") == "0", "engines disagreed during the benchmark");
    c.expect(value_of("oracle_disagreements") == "0", "reference oracle disagreed");
    c.expect(count_key("instance") == 40, "per-instance lines missing");
    c.expect(value_of("fitted_step_constant") != "<missing>" &&
                 std::stod(value_of("fitted_step_constant")) <= 8.0,
             "fitted step constant missing or above budget");
    c.expect(value_of("max_round_slack") != "<missing>" &&
                 std::stod(value_of("max_round_slack")) <= 0.0,
             "round budget slack is positive");
    // The implemented candidate count equals the shortest word length.
    c.expect(value_of("demo_candidates_total") == "5" &&
                 value_of("demo_shortest_word_length") == "5",
             "candidate count does not match the shortest word length");
    c.expect(value_of("demo_candidates_checked") == "3", "demo checked count is not 3");
    c.expect(value_of("demo_cover") == "aba", "demo cover is not aba");
    c.expect(value_of("scc_total_steps") != "<missing>", "measured search cost missing");
    c.expect(value_of("scc_serial_step_constant") != "<missing>",
             "serial search constant missing");
    c.expect(value_of("scc_parallel_quadratic_constant") != "<missing>",
             "quadratic round constant missing");
    c.expect(count_key("note") == 2, "explanatory notes missing from the report");
    return c;
}

}  // namespace

int main() {
    verdict(1, "string-cover agreement on 10000 random word pairs",
            check_string_cover_agreement());
    verdict(2, "covered word sets are trie-covered in both modes",
            check_covered_sets_both_modes());
    verdict(3, "node and edge coverage separate on aba over abaaaba",
            check_mode_separation_fixture());
    verdict(4, "shortest common cover agrees with the oracle on 1200 families",
            check_scc_oracle_agreement());
    verdict(5, "shortest cover agrees with the oracle on 10000 words",
            check_shortest_cover_agreement());
    verdict(6, "canonical form ignores insertion order on 1000 languages",
            check_canonical_insertion_order());
    verdict(7, "reflexivity on 1000 tries and witness composition on 1000 chains",
            check_reflexivity_and_composition());
    verdict(8, "serial and parallel engines match within work budgets",
            check_engine_equivalence_and_budgets());
    verdict(9, "the aba-covered language up to length 11 and 100 random subsets",
            check_covered_language_scenario());
    verdict(10, "benchmark reports candidate counts, measured costs, and caveats",
            check_bench_report());
    return failures;
}
