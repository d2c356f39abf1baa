#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "covertrie/dta.hpp"
#include "testutil.hpp"

using namespace covertrie;
using namespace testutil;

namespace {

bool has_violation(const std::vector<Violation>& violations, ViolationKind kind) {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.kind == kind; });
}

std::vector<Word> sorted_unique(std::vector<Word> words, const Alphabet& alphabet) {
    std::sort(words.begin(), words.end(), [&](const Word& x, const Word& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return alphabet.decode(x) < alphabet.decode(y);
    });
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

}  // namespace

TEST_CASE("path automaton shape") {
    Alphabet a = ab();
    Dta p = path_automaton(enc(a, U"aba"), a);
    CHECK(p.num_states() == 4);
    CHECK(p.root() == 0);
    CHECK(p.finals() == std::vector<StateId>{3});
    CHECK(p.num_transitions() == 3);
    CHECK(validate(p).empty());
    CHECK(accepts(p, enc(a, U"aba")));
    CHECK_FALSE(accepts(p, enc(a, U"ab")));
    CHECK_FALSE(accepts(p, enc(a, U"abab")));
    CHECK(depth(p) == 3);

    Dta e = path_automaton(Word{}, a);
    CHECK(e.num_states() == 1);
    CHECK(e.is_final(e.root()));
    CHECK(validate(e).empty());
    CHECK(accepts(e, Word{}));
    CHECK(depth(e) == 0);
}

TEST_CASE("trie construction is shape-frozen on a worked set") {
    Alphabet a = ab();
    Dta t = build_trie(enc_all(a, {U"aba", U"abaaba"}), a);
    CHECK(t.num_states() == 7);
    CHECK(t.finals().size() == 2);
    CHECK(depth(t) == 6);
    CHECK(validate(t).empty());
    CHECK(accepts(t, enc(a, U"aba")));
    CHECK(accepts(t, enc(a, U"abaaba")));
    CHECK_FALSE(accepts(t, enc(a, U"ab")));
    CHECK_FALSE(accepts(t, enc(a, U"abaab")));
}

TEST_CASE("trie does not depend on word order or duplicates") {
    Alphabet a = ab();
    std::vector<std::u32string> texts = {U"aba", U"ababa", U"abaaba", U"b"};
    Dta reference = build_trie(enc_all(a, texts), a);

    std::vector<std::u32string> shuffled = {U"b", U"abaaba", U"aba", U"ababa"};
    CHECK(build_trie(enc_all(a, shuffled), a) == reference);

    std::vector<std::u32string> doubled = {U"aba", U"aba", U"ababa", U"abaaba", U"b", U"b"};
    CHECK(build_trie(enc_all(a, doubled), a) == reference);
}

TEST_CASE("empty language is rejected") {
    Alphabet a = ab();
    CHECK_THROWS_AS(build_trie({}, a), EmptyLanguage);
}

TEST_CASE("word insertion agrees with rebuilding") {
    Alphabet a = ab();
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
        std::vector<Word> words = random_word_set(rng, 2, 1 + rng() % 5, 8, true);
        Dta t = build_trie(words, a);
        Word extra = random_word(rng, 2, rng() % 9);
        Dta inserted = insert_word(t, extra);
        words.push_back(extra);
        CHECK(inserted == build_trie(words, a));
    }
}

TEST_CASE("language round trip") {
    Alphabet a = ab();
    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; ++i) {
        std::vector<Word> words = random_word_set(rng, 2, 1 + rng() % 6, 10, true);
        Dta t = build_trie(words, a);
        CHECK(validate(t).empty());
        CHECK(enumerate_language(t) == sorted_unique(words, a));
        for (const Word& w : words) CHECK(accepts(t, w));
        std::size_t longest = 0;
        for (const Word& w : words) longest = std::max(longest, w.size());
        CHECK(depth(t) == longest);
        // One accepted word per final state, states count = distinct prefixes.
        CHECK(t.finals().size() == sorted_unique(words, a).size());
        std::set<Word> prefixes;
        for (const Word& w : words) {
            for (std::size_t l = 0; l <= w.size(); ++l) {
                prefixes.insert(Word(w.begin(), w.begin() + l));
            }
        }
        CHECK(t.num_states() == prefixes.size());
        CHECK(t.num_transitions() == t.num_states() - 1);
    }
}

TEST_CASE("validator flags each violation kind") {
    Alphabet a = ab();

    CHECK(has_violation(validate(Dta(a, {}, 0, {})), ViolationKind::EmptyAutomaton));

    CHECK(has_violation(validate(Dta(a, {{}}, 5, {0})), ViolationKind::BadRoot));

    CHECK(has_violation(validate(Dta(a, {{{0, 9}}, {}}, 0, {1})),
                        ViolationKind::DanglingState));

    CHECK(has_violation(validate(Dta(a, {{{0, 1}, {1, 0}}, {}}, 0, {1})),
                        ViolationKind::RootIndegree));

    // Two parents for state 2.
    CHECK(has_violation(
        validate(Dta(a, {{{0, 1}, {1, 2}}, {{0, 2}}, {}}, 0, {2})),
        ViolationKind::MultipleParents));

    // State 2 disconnected from the root.
    CHECK(has_violation(validate(Dta(a, {{{0, 1}}, {}, {}}, 0, {1, 2})),
                        ViolationKind::UnreachableState));

    // Two a-transitions out of the root.
    CHECK(has_violation(
        validate(Dta(a, {{{0, 1}, {0, 2}}, {}, {}}, 0, {1, 2})),
        ViolationKind::Nondeterministic));

    // Leaf state 1 not final.
    CHECK(has_violation(validate(Dta(a, {{{0, 1}}, {}}, 0, {})),
                        ViolationKind::NonFinalLeaf));

    // Symbol 7 is not in the two-letter alphabet.
    CHECK(has_violation(validate(Dta(a, {{{7, 1}}, {}}, 0, {1})),
                        ViolationKind::SymbolOutOfRange));

    CHECK(has_violation(validate(Dta(a, {{}}, 0, {3})), ViolationKind::BadFinal));
}

TEST_CASE("tree index reports parents, symbols, and levels") {
    Alphabet a = ab();
    Dta t = build_trie(enc_all(a, {U"aba", U"ab", U"b"}), a);
    TreeIndex index(t);
    CHECK(index.parent[t.root()] == kNoState);
    CHECK(index.node_depth[t.root()] == 0);
    CHECK(index.levels[0] == std::vector<StateId>{t.root()});

    std::size_t seen = 0;
    for (std::size_t d = 0; d < index.levels.size(); ++d) {
        for (StateId v : index.levels[d]) {
            seen += 1;
            CHECK(index.node_depth[v] == d);
            if (v != t.root()) {
                StateId p = index.parent[v];
                CHECK(index.node_depth[p] + 1 == d);
                CHECK(t.child(p, index.parent_symbol[v]) == v);
            }
        }
        CHECK(std::is_sorted(index.levels[d].begin(), index.levels[d].end()));
    }
    CHECK(seen == t.num_states());
}

TEST_CASE("alphabet remapping preserves the language by display character") {
    Alphabet small = ab();
    Alphabet big = Alphabet::collect({U"abxy"});
    Dta t = build_trie(enc_all(small, {U"aba", U"ab"}), small);

    auto remapped = remap_alphabet(t, big);
    REQUIRE(remapped.has_value());
    CHECK(remapped->alphabet() == big);
    CHECK(accepts(*remapped, big.encode_or_throw(U"aba")));
    CHECK(accepts(*remapped, big.encode_or_throw(U"ab")));
    CHECK_FALSE(accepts(*remapped, big.encode_or_throw(U"ax")));
    CHECK(validate(*remapped).empty());

    Alphabet missing = Alphabet::collect({U"a"});
    CHECK_FALSE(remap_alphabet(t, missing).has_value());

    // Unused letters of the source alphabet do not constrain the target.
    Dta wide_unused = build_trie(enc_all(big, {U"aba", U"ab"}), big);
    auto narrowed = remap_alphabet(wide_unused, small);
    REQUIRE(narrowed.has_value());
    CHECK(narrowed->alphabet() == small);
    CHECK(accepts(*narrowed, enc(small, U"aba")));
    CHECK(*narrowed == t);
}

TEST_CASE("child lookup is exact") {
    Alphabet a = abc();
    Dta t = build_trie(enc_all(a, {U"ab", U"ac", U"b"}), a);
    StateId root = t.root();
    auto to_a = t.child(root, *a.find(U'a'));
    auto to_b = t.child(root, *a.find(U'b'));
    REQUIRE(to_a.has_value());
    REQUIRE(to_b.has_value());
    CHECK_FALSE(t.child(root, *a.find(U'c')).has_value());
    CHECK(t.child(*to_a, *a.find(U'b')).has_value());
    CHECK(t.child(*to_a, *a.find(U'c')).has_value());
    CHECK(t.is_leaf(*to_b));
    CHECK(t.is_final(*to_b));
}
