#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mindil {

enum class Twist : std::uint8_t { Alpha, Beta };

struct Syllable {
    Twist gen;
    long exp;  // nonzero

    bool operator==(const Syllable&) const = default;
};

/// Word in the two twist generators, held in canonical syllable form:
/// adjacent syllables use distinct generators and every exponent is nonzero.
/// The empty word is the identity.
///
/// Text syntax: whitespace-separated syllables `a`, `b`, `a^k`, `b^k` with
/// nonzero integer k, e.g. "a b" or "a^2 b^-1".
class TwistWord {
public:
    TwistWord() = default;
    TwistWord(std::initializer_list<Syllable> syls);
    explicit TwistWord(std::vector<Syllable> syls);

    static TwistWord parse(const std::string& text);

    const std::vector<Syllable>& syllables() const { return syllables_; }
    bool empty() const { return syllables_.empty(); }
    std::size_t syllable_count() const { return syllables_.size(); }

    /// Total letter length (sum of |exponent|).
    std::uint64_t letter_length() const;

    TwistWord operator*(const TwistWord& o) const;  // concatenation, re-canonicalized
    TwistWord inverse() const;

    bool operator==(const TwistWord&) const = default;

    std::string str() const;  // "" for the identity

private:
    std::vector<Syllable> syllables_;
};

}  // namespace mindil
