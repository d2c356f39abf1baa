#include "covertrie/word.hpp"

#include <algorithm>
#include <set>

namespace covertrie {

SymbolId Alphabet::intern(char32_t display) {
    auto it = ids_.find(display);
    if (it != ids_.end()) return it->second;
    SymbolId id = static_cast<SymbolId>(display_.size());
    display_.push_back(display);
    ids_.emplace(display, id);
    return id;
}

std::optional<SymbolId> Alphabet::find(char32_t display) const {
    auto it = ids_.find(display);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

char32_t Alphabet::display(SymbolId id) const {
    if (id >= display_.size()) throw std::out_of_range("symbol id out of range");
    return display_[id];
}

Alphabet Alphabet::collect(const std::vector<std::u32string>& texts) {
    std::set<char32_t> chars;
    for (const auto& t : texts) chars.insert(t.begin(), t.end());
    Alphabet a;
    for (char32_t c : chars) a.intern(c);
    return a;
}

std::optional<Word> Alphabet::encode(std::u32string_view text) const {
    Word w;
    w.reserve(text.size());
    for (char32_t c : text) {
        auto id = find(c);
        if (!id) return std::nullopt;
        w.push_back(*id);
    }
    return w;
}

Word Alphabet::encode_or_throw(std::u32string_view text) const {
    for (char32_t c : text) {
        if (!find(c)) {
            throw AlphabetMismatch("character '" + utf8_encode(c) + "' is not in the alphabet");
        }
    }
    return *encode(text);
}

std::u32string Alphabet::decode(const Word& word) const {
    std::u32string s;
    s.reserve(word.size());
    for (SymbolId id : word) s.push_back(display(id));
    return s;
}

std::u32string utf8_decode(std::string_view bytes) {
    std::u32string out;
    std::size_t i = 0;
    while (i < bytes.size()) {
        unsigned char b0 = static_cast<unsigned char>(bytes[i]);
        char32_t cp = 0;
        std::size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            throw std::runtime_error("invalid UTF-8 lead byte at offset " + std::to_string(i));
        }
        if (i + len > bytes.size()) throw std::runtime_error("truncated UTF-8 sequence");
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char b = static_cast<unsigned char>(bytes[i + k]);
            if ((b & 0xC0) != 0x80) throw std::runtime_error("invalid UTF-8 continuation byte");
            cp = (cp << 6) | (b & 0x3F);
        }
        static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            throw std::runtime_error("invalid UTF-8 scalar value");
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string utf8_encode(char32_t c) {
    std::string out;
    if (c < 0x80) {
        out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (c >> 6)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (c >> 12)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (c >> 18)));
        out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
    return out;
}

std::string utf8_encode(std::u32string_view text) {
    std::string out;
    for (char32_t c : text) out += utf8_encode(c);
    return out;
}

}  // namespace covertrie
