#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace twistlab {

/// Generators of the free group on two letters and their inverses.
/// Rendering convention: lowercase generator, uppercase inverse.
enum class Letter : std::uint8_t { a = 0, A = 1, b = 2, B = 3 };

inline Letter inverse(Letter l) {
    switch (l) {
    case Letter::a: return Letter::A;
    case Letter::A: return Letter::a;
    case Letter::b: return Letter::B;
    default: return Letter::b;
    }
}

inline char to_char(Letter l) {
    static const char c[4] = {'a', 'A', 'b', 'B'};
    return c[static_cast<int>(l)];
}

std::optional<Letter> letter_from_char(char c);

/// Reduced word over {a, a^-1, b, b^-1}. All construction paths reduce,
/// so adjacent inverse pairs never survive.
class Word {
  public:
    Word() = default;

    /// Reduces an arbitrary letter string with one stack pass.
    static Word reduce(const std::vector<Letter>& raw);

    /// Single reduced word "e" or a run of letters a, A, b, B.
    /// Returns nothing if a character is foreign or "e" is mixed in.
    static std::optional<Word> parse(const std::string& text);

    std::size_t size() const { return ls_.size(); }
    bool empty() const { return ls_.empty(); }
    Letter operator[](std::size_t i) const { return ls_[i]; }
    const std::vector<Letter>& letters() const { return ls_; }

    Word inverse() const;

    /// Signed number of a-letters; a homomorphism to the integers.
    long a_exponent() const;
    /// Signed number of b-letters; a homomorphism to the integers.
    long b_exponent() const;

    bool operator==(const Word& o) const { return ls_ == o.ls_; }
    bool operator<(const Word& o) const { return ls_ < o.ls_; }

  private:
    std::vector<Letter> ls_;
};

Word operator*(const Word& u, const Word& v);

/// "e" for the empty word, otherwise the letter run.
std::string to_string(const Word& w);

/// Every reduced word of length <= max_len, ordered by length and then by
/// generation order a, A, b, B. Deterministic.
std::vector<Word> all_reduced_words(std::size_t max_len);

} // namespace twistlab
