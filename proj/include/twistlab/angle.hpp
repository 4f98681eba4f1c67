#pragma once

#include "twistlab/numeric.hpp"

#include <string>

namespace twistlab {

/// Point of the circle R/Z written additively as q + m*theta, where
/// theta = (sqrt(5)-1)/2 and q is rational. Normalization reduces q into
/// [0, 1) and never folds m, so equality of representations is equality
/// in R/Z: theta is irrational, hence q + m*theta = q' + m'*theta mod 1
/// forces m = m' and q = q'.
struct Angle {
    Rational q{0};
    Int m{0};

    Angle() = default;
    Angle(Rational q_, Int m_ = 0) : q(mod1(q_)), m(std::move(m_)) {}

    bool operator==(const Angle& o) const { return q == o.q && m == o.m; }
    bool is_zero() const { return q == 0 && m == 0; }
};

inline Angle operator+(const Angle& a, const Angle& b) {
    return Angle(a.q + b.q, a.m + b.m);
}

/// Inverse for the additive circle law.
inline Angle operator-(const Angle& a) { return Angle(-a.q, -a.m); }

inline Angle operator-(const Angle& a, const Angle& b) { return a + (-b); }

/// k-th multiple of a, k an integer.
inline Angle scale(const Int& k, const Angle& a) {
    return Angle(a.q * Rational(k), a.m * k);
}

/// Exact value of a as a point of [0, 1): sign of value(a) - r.
/// Comparisons against the quadratic irrational theta reduce to integer
/// arithmetic, so the result carries no rounding at all.
int compare_value_to(const Angle& a, const Rational& r);

/// Sign of value(a) - value(b), values taken in [0, 1). Exact.
int compare_values(const Angle& a, const Angle& b);

/// floor(q + m*theta) as an exact integer.
Int exact_floor(const Rational& q, const Int& m);

/// Value of a in [0, 1) rounded to prec_bits bits. The result differs
/// from the exact value by less than 2^(-prec_bits + 4). Requires
/// prec_bits >= 64.
BigFloat angle_to_float(const Angle& a, unsigned prec_bits = 128);

/// "q", or "q + m*theta" / "q - m*theta" when m is nonzero.
std::string to_string(const Angle& a);

/// Point of the 2-torus. x is the coordinate an irrational rotation acts
/// on; y stays rational in [0, 1) throughout.
struct BasePoint {
    Angle x;
    Rational y{0};

    BasePoint() = default;
    BasePoint(Angle x_, Rational y_) : x(std::move(x_)), y(mod1(y_)) {}

    bool operator==(const BasePoint& o) const { return x == o.x && y == o.y; }
};

/// steps applications of the rotation x -> x + theta.
inline BasePoint rotate_x(const BasePoint& p, const Int& steps = 1) {
    return BasePoint(Angle(p.x.q, p.x.m + steps), p.y);
}

/// "(x; y)"
std::string to_string(const BasePoint& p);

} // namespace twistlab
