#pragma once

#include "twistlab/errors.hpp"
#include "twistlab/twist.hpp"

#include <memory>
#include <string>

namespace twistlab {

// ---------------------------------------------------------------------------
// Element expressions:
//
//   expr    := factor ( '*' factor )*
//   factor  := atom ( '^-1' )*  |  angle '@' factor
//   atom    := literal | '(' expr ')'
//   literal := '[' word '|' angle ';' rational '|' angle ']'
//   angle   := rational ( ('+'|'-') integer '*' 'theta' )?
//
// The action prefix swallows the factor to its right; invert an acted
// element with parentheses. Literals use the canonical rendering, so
// parsing a rendered element returns it unchanged.

struct Expression {
    enum class Kind { literal, product, inverse, action };

    Kind kind = Kind::literal;
    std::size_t line = 1;
    std::size_t col = 1;
    TwistElement element;
    Angle rotation;
    std::unique_ptr<Expression> left;
    std::unique_ptr<Expression> right;
};

/// Throws SyntaxError with 1-based position and the expected token set.
std::unique_ptr<Expression> parse(const std::string& text);

/// Composability failures are rethrown with the failing node's position
/// appended to the message.
TwistElement eval(const Expression& expr);

TwistElement eval_string(const std::string& text);

/// Whole-string forms of the sub-grammars, for round trips.
Angle parse_angle(const std::string& text);
TwistElement parse_element(const std::string& text);

} // namespace twistlab
