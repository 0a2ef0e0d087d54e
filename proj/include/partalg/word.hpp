#pragma once

// Words over the generator alphabet {s_i, f_i, e_i} and their diagram values.

#include <algorithm>
#include <cctype>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partalg/errors.hpp"
#include "partalg/seatplan.hpp"

namespace partalg {

struct Letter {
    enum class Tag : char { S = 's', F = 'f', E = 'e' };

    Tag tag;
    int index;

    static Letter s(int i) { return {Tag::S, i}; }
    static Letter f(int i) { return {Tag::F, i}; }
    static Letter e(int i) { return {Tag::E, i}; }

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;

    std::string to_string() const { return std::string(1, static_cast<char>(tag)) + std::to_string(index); }

    /// Whether the letter names a generator of A_n.
    bool valid_for(int n) const { return index >= 1 && index <= (tag == Tag::E ? n : n - 1); }
};

using Word = std::vector<Letter>;

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Reverses the word; every generator is fixed by the involution.
inline Word star(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

/// "s1 f2 e3"; the empty word prints as "1".
inline std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += l.to_string();
    }
    return out;
}

/// Case-insensitive; accepts "1" or blank for the empty word.
inline Word parse_word(std::string_view text) {
    Word out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
    };
    skip();
    if (pos < text.size() && text[pos] == '1') {
        ++pos;
        skip();
        if (pos != text.size()) throw ParseError(pos, "unexpected text after identity word");
        return out;
    }
    while (pos < text.size()) {
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[pos])));
        Letter::Tag tag;
        switch (c) {
            case 's': tag = Letter::Tag::S; break;
            case 'f': tag = Letter::Tag::F; break;
            case 'e': tag = Letter::Tag::E; break;
            default: throw ParseError(pos, std::string("unknown generator '") + text[pos] + "'");
        }
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError(pos, "expected generator index");
        if (pos - start > 6) throw ParseError(start, "generator index too large");
        int index = std::stoi(std::string(text.substr(start, pos - start)));
        if (index == 0) throw ParseError(start, "generator indices start at 1");
        out.push_back({tag, index});
        skip();
    }
    return out;
}

inline SeatPlan generator(int n, const Letter& l) {
    switch (l.tag) {
        case Letter::Tag::S: return generator_s(n, l.index);
        case Letter::Tag::F: return generator_f(n, l.index);
        case Letter::Tag::E: return generator_e(n, l.index);
    }
    throw Error(ErrorCode::IndexOutOfRange, "bad letter");
}

/// Diagram of a word and the accumulated power of Q.
struct WordValue {
    SeatPlan diagram;
    int power = 0;

    friend bool operator==(const WordValue&, const WordValue&) = default;
};

/// Left-to-right product of the generator diagrams.
inline WordValue eval_word(const Word& word, int n) {
    WordValue acc{SeatPlan::identity(n), 0};
    for (const auto& l : word) {
        auto r = compose(acc.diagram, generator(n, l));
        acc.diagram = std::move(r.diagram);
        acc.power += r.removed;
    }
    return acc;
}

}  // namespace partalg
