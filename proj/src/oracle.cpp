#include "covertrie/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace covertrie::oracle {

std::vector<std::size_t> occurrences(const Word& pattern, const Word& text) {
    std::vector<std::size_t> out;
    if (pattern.size() > text.size()) return out;
    for (std::size_t p = 0; p + pattern.size() <= text.size(); ++p) {
        if (std::equal(pattern.begin(), pattern.end(), text.begin() + p)) out.push_back(p);
    }
    return out;
}

bool naive_covers(const Word& cover, const Word& text) {
    if (cover.empty()) return text.empty();
    if (text.empty()) return false;  // a non-empty cover has no occurrence to place
    std::vector<std::size_t> occ = occurrences(cover, text);
    std::vector<std::uint8_t> hit(text.size(), 0);
    for (std::size_t p : occ) {
        for (std::size_t i = p; i < p + cover.size(); ++i) hit[i] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](std::uint8_t h) { return h != 0; });
}

std::vector<Word> naive_borders(const Word& word) {
    std::vector<Word> out;
    for (std::size_t l = 1; l < word.size(); ++l) {
        if (std::equal(word.begin(), word.begin() + l, word.end() - l)) {
            out.emplace_back(word.begin(), word.begin() + l);
        }
    }
    if (!word.empty()) out.push_back(word);
    return out;
}

Word naive_shortest_cover(const Word& word) {
    for (std::size_t l = 1; l <= word.size(); ++l) {
        Word candidate(word.begin(), word.begin() + l);
        if (naive_covers(candidate, word)) return candidate;
    }
    return word;  // reached only for the empty word, which covers itself
}

std::optional<Word> naive_shortest_common_cover(const std::vector<Word>& words) {
    if (words.empty()) return std::nullopt;
    const Word* shortest = &words.front();
    for (const Word& w : words) {
        if (w.size() < shortest->size()) shortest = &w;
    }
    for (std::size_t l = 0; l <= shortest->size(); ++l) {
        Word candidate(shortest->begin(), shortest->begin() + l);
        bool all = std::all_of(words.begin(), words.end(),
                               [&](const Word& w) { return naive_covers(candidate, w); });
        if (all) return candidate;
    }
    return std::nullopt;
}

std::vector<Word> enumerate_covered_language(const Word& cover, std::size_t max_len,
                                             std::size_t guard) {
    if (cover.empty()) return {Word{}};
    std::set<Word> found;
    if (cover.size() > max_len) return {};

    // Admissible distances between consecutive occurrence starts: shift s
    // keeps the text gap-free when s <= |cover| and the trailing |cover|-s
    // letters of one copy agree with the leading letters of the next.
    std::vector<std::size_t> shifts;
    for (std::size_t s = 1; s <= cover.size(); ++s) {
        std::size_t overlap = cover.size() - s;
        if (std::equal(cover.begin(), cover.begin() + overlap, cover.end() - overlap)) {
            shifts.push_back(s);
        }
    }

    std::vector<Word> frontier = {cover};
    found.insert(cover);
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (std::size_t s : shifts) {
                if (w.size() + s > max_len) continue;
                Word extended = w;
                extended.insert(extended.end(), cover.end() - static_cast<std::ptrdiff_t>(s),
                                cover.end());
                if (found.insert(extended).second) {
                    if (found.size() > guard) {
                        throw std::runtime_error(
                            "covered-language enumeration exceeded the guard of " +
                            std::to_string(guard) + " words");
                    }
                    next.push_back(std::move(extended));
                }
            }
        }
        frontier = std::move(next);
    }

    std::vector<Word> out;
    out.reserve(found.size());
    for (const Word& w : found) {
        if (!naive_covers(cover, w)) {
            throw std::runtime_error("covered-language enumeration produced an uncovered word");
        }
        out.push_back(w);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Word& a, const Word& b) { return a.size() < b.size(); });
    return out;
}

}  // namespace covertrie::oracle
