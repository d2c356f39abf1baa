#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace covertrie {

using SymbolId = std::uint32_t;

/// A word is a sequence of interned symbol ids.
using Word = std::vector<SymbolId>;

class AlphabetMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Bidirectional table between display characters (Unicode scalar values)
/// and dense symbol ids 0..size()-1. Interning is injective; ids are
/// assigned in first-seen order by intern() and in ascending scalar order
/// by collect().
class Alphabet {
public:
    Alphabet() = default;

    /// Interns a character, assigning the next free id on first sight.
    SymbolId intern(char32_t display);

    std::optional<SymbolId> find(char32_t display) const;

    char32_t display(SymbolId id) const;

    std::size_t size() const { return display_.size(); }

    bool operator==(const Alphabet& other) const { return display_ == other.display_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

    /// Alphabet over every character appearing in the given texts,
    /// interned in ascending scalar-value order.
    static Alphabet collect(const std::vector<std::u32string>& texts);

    /// Encodes a text over this alphabet; nullopt if a character is unknown.
    std::optional<Word> encode(std::u32string_view text) const;

    /// Like encode() but throws AlphabetMismatch naming the first unknown character.
    Word encode_or_throw(std::u32string_view text) const;

    std::u32string decode(const Word& word) const;

private:
    std::vector<char32_t> display_;
    std::map<char32_t, SymbolId> ids_;
};

// UTF-8 <-> UTF-32 conversions for the file and CLI boundaries.
std::u32string utf8_decode(std::string_view bytes);  // throws std::runtime_error on invalid UTF-8
std::string utf8_encode(std::u32string_view text);
std::string utf8_encode(char32_t c);

}  // namespace covertrie
