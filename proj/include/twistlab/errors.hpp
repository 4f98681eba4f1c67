#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistlab {

/// Pairing or comparison of fibre points that live over different base
/// points or in different bundles.
struct BaseMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Chart transition requested at a point outside the chart overlap.
struct NotInOverlap : std::domain_error {
    using std::domain_error::domain_error;
};

/// Winding input with a consecutive gap of 1/4 or more; the integer lift
/// is not determined at that sampling density.
struct SamplingTooCoarse : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Tuple entries whose base points violate the compatibility chain.
/// `index` is the 1-based index of the first failing chain equation,
/// linking entries index and index+1.
struct ChainMismatch : std::invalid_argument {
    std::size_t index;
    ChainMismatch(std::size_t i, const std::string& what)
        : std::invalid_argument(what), index(i) {}
};

/// Tuple entry stored in a bundle other than the one its letter requires.
/// `index` is the 1-based entry position.
struct WrongBundle : std::invalid_argument {
    std::size_t index;
    WrongBundle(std::size_t i, const std::string& what)
        : std::invalid_argument(what), index(i) {}
};

/// Product of two arrows whose base points do not match. The message
/// carries both rendered base points.
struct NotComposable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Word filter that is not closed under product or inverse; the message
/// carries the witness found by the closure search.
struct NotSubgroupoid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Candidate section that fails the sampled section identity.
struct NotASection : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Candidate 2-cocycle violating the cocycle identity or the unit
/// normalization; the message carries a witness triple.
struct CocycleIdentityViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Verification suite name that is not recognized.
struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Expression or literal that does not parse. Positions are 1-based.
struct SyntaxError : std::invalid_argument {
    std::size_t line;
    std::size_t col;
    std::string expected;
    SyntaxError(std::size_t line_, std::size_t col_, std::string expected_,
                const std::string& what)
        : std::invalid_argument(what), line(line_), col(col_),
          expected(std::move(expected_)) {}
};

} // namespace twistlab
