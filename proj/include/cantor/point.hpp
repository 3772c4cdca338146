#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace cantor {

// Tail of an eventually constant ternary expansion.
enum class Tail : char { Zeros = '0', Twos = '2' };

// A point of the Cantor set C: the real number in [0,1] whose ternary
// expansion is `word` followed by infinitely many copies of the tail digit.
// Only the digits 0 and 2 occur, so every point has a unique expansion and
// lexicographic comparison of expansions is the real order.
//
// Stored canonically: the word never ends with the tail digit. Structural
// equality of canonical forms is therefore equality of the reals.
class CantorPoint {
public:
    CantorPoint() = default;  // the point 0

    // Canonicalizes. Throws Error if the word contains a digit other than 0 or 2.
    CantorPoint(std::string word, Tail tail);

    const std::string& word() const { return word_; }
    Tail tail() const { return tail_; }

    // i-th digit of the full expansion, 0-indexed.
    char digit_at(std::size_t i) const {
        return i < word_.size() ? word_[i] : static_cast<char>(tail_);
    }

    // First `length` digits of the full expansion.
    std::string expansion_prefix(std::size_t length) const;

    // Real-number order. Decided within max(|a.word|, |b.word|) + 1 digits.
    std::strong_ordering operator<=>(const CantorPoint& other) const;
    bool operator==(const CantorPoint& other) const = default;

private:
    std::string word_;
    Tail tail_ = Tail::Zeros;
};

// Text format: a word over {0,2} with an optional tail marker "~0" or "~2";
// a missing marker means "~0". "" and "~0" both denote the point 0.
CantorPoint parse_point(std::string_view text);

// Canonical text: the word (or "0" for the empty word) and, for a twos tail,
// the suffix "~2". parse_point(to_string(p)) == p for every p.
std::string to_string(const CantorPoint& p);

}  // namespace cantor
