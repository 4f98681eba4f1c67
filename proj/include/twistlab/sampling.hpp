#pragma once

#include "twistlab/angle.hpp"
#include "twistlab/word.hpp"

#include <cstdint>

namespace twistlab {

/// Deterministic generator pinned for reproducible reports: SplitMix64
/// with the standard constants. Trial i of a run seeded with s draws from
/// Sampler(s, i); results are therefore independent of thread count and
/// platform. Bounded draws use plain modulo on the 64-bit output.
class Sampler {
  public:
    Sampler(std::uint64_t seed, std::uint64_t stream)
        : s_(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 0x632BE59BD9B4E019ULL))) {}

    std::uint64_t u64() {
        s_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n ? u64() % n : 0; }

    long int_in(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Rational in [0, 1) with denominator at most max_den.
    Rational rational(unsigned max_den = 64) {
        std::uint64_t d = 1 + below(max_den);
        std::uint64_t n = below(d);
        return Rational(Int(n), Int(d));
    }

    Angle angle(unsigned max_den = 64, long max_m = 3) {
        return Angle(rational(max_den), Int(int_in(-max_m, max_m)));
    }

    BasePoint base_point() { return BasePoint(angle(), rational()); }

    Letter letter() { return static_cast<Letter>(below(4)); }

    /// Reduced word of exactly the drawn length <= max_len.
    Word word(std::size_t max_len) {
        std::size_t len = below(max_len + 1);
        std::vector<Letter> raw;
        raw.reserve(len);
        for (std::size_t i = 0; i < len; ++i) {
            if (raw.empty()) {
                raw.push_back(letter());
                continue;
            }
            Letter banned = inverse(raw.back());
            int pick = static_cast<int>(below(3));
            for (int c = 0; c < 4; ++c) {
                Letter l = static_cast<Letter>(c);
                if (l == banned) continue;
                if (pick == 0) {
                    raw.push_back(l);
                    break;
                }
                --pick;
            }
        }
        return Word::reduce(raw);
    }

  private:
    std::uint64_t s_;
};

} // namespace twistlab
