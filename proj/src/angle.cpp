#include "twistlab/angle.hpp"

#include <cassert>
#include <sstream>
#include <utility>

namespace twistlab {

std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

// sign of m*sqrt(5) - u. Both sides are squared once the signs agree, so
// the comparison is pure integer arithmetic; 5*m^2 is never a square for
// m != 0, hence a zero result only happens at m = 0, u = 0.
static int cmp_m_sqrt5(const Int& m, const Rational& u) {
    if (m == 0) {
        if (u < 0) return 1;
        if (u > 0) return -1;
        return 0;
    }
    if (m > 0) {
        if (u <= 0) return 1;
        Rational d = Rational(5 * m * m) - u * u;
        return d > 0 ? 1 : -1;
    }
    if (u >= 0) return -1;
    Rational d = u * u - Rational(5 * m * m);
    return d > 0 ? 1 : -1;
}

// sign of m*theta - t, via 2*(m*theta - t) = m*sqrt(5) - (m + 2t).
static int cmp_m_theta(const Int& m, const Rational& t) {
    return cmp_m_sqrt5(m, Rational(m) + 2 * t);
}

Int exact_floor(const Rational& q0, const Int& m) {
    Int fq = floor_rat(q0);
    Rational q = q0 - Rational(fq);

    // floor(m * sqrt(5)); sqrt on integers is the floored square root.
    Int f5 = 0;
    if (m != 0) {
        Int s = boost::multiprecision::sqrt(Int(5 * m * m));
        f5 = m > 0 ? s : Int(-(s + 1));
    }
    // m*sqrt(5) lies in [f5, f5+1), so (m*sqrt(5) - m)/2 lies in a
    // half-open interval of length 1/2 and its floor is determined.
    Int g = floor_div(f5 - m, 2);
    // q + m*theta lies in [g, g+2); pick between g and g+1 exactly.
    Int f = g;
    if (cmp_m_theta(m, Rational(g) + 1 - q) >= 0) ++f;
    return fq + f;
}

int compare_value_to(const Angle& a, const Rational& r) {
    Int f = exact_floor(a.q, a.m);
    return cmp_m_theta(a.m, r - a.q + Rational(f));
}

int compare_values(const Angle& a, const Angle& b) {
    Int fa = exact_floor(a.q, a.m);
    Int fb = exact_floor(b.q, b.m);
    return cmp_m_theta(a.m - b.m, (b.q - a.q) + Rational(fa - fb));
}

std::string to_string(const Angle& a) {
    if (a.m == 0) return to_string(a.q);
    std::string s = to_string(a.q);
    if (a.m > 0)
        s += " + " + a.m.str() + "*theta";
    else
        s += " - " + Int(-a.m).str() + "*theta";
    return s;
}

std::string to_string(const BasePoint& p) {
    return "(" + to_string(p.x) + "; " + to_string(p.y) + ")";
}

// ---------------------------------------------------------------------------
// BigFloat

BigFloat::BigFloat(unsigned prec_bits) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(prec_bits));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(BigFloat o) {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

unsigned BigFloat::precision_bits() const {
    return static_cast<unsigned>(mpfr_get_prec(v_));
}

BigFloat BigFloat::from_rational(const Rational& q, unsigned prec_bits) {
    BigFloat r(prec_bits);
    mpfr_set_q(r.v_, q.backend().data(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_decimal(const std::string& digits, unsigned prec_bits) {
    BigFloat r(prec_bits);
    mpfr_set_str(r.v_, digits.c_str(), 10, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::two_pow(long e, unsigned prec_bits) {
    BigFloat r(prec_bits);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::golden_conjugate(unsigned prec_bits) {
    BigFloat r(prec_bits);
    mpfr_t t;
    mpfr_init2(t, static_cast<mpfr_prec_t>(prec_bits) + 32);
    mpfr_sqrt_ui(t, 5, MPFR_RNDN);
    mpfr_sub_ui(t, t, 1, MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    mpfr_set(r.v_, t, MPFR_RNDN);
    mpfr_clear(t);
    return r;
}

BigFloat BigFloat::operator+(const BigFloat& o) const {
    BigFloat r(std::max(precision_bits(), o.precision_bits()));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-(const BigFloat& o) const {
    BigFloat r(std::max(precision_bits(), o.precision_bits()));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator*(const BigFloat& o) const {
    BigFloat r(std::max(precision_bits(), o.precision_bits()));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision_bits());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::fractional() const {
    BigFloat r(precision_bits());
    mpfr_t f;
    mpfr_init2(f, mpfr_get_prec(v_));
    mpfr_floor(f, v_);
    mpfr_sub(r.v_, v_, f, MPFR_RNDN);
    mpfr_clear(f);
    return r;
}

int BigFloat::compare(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }

double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

unsigned __int128 BigFloat::to_fixed120() const {
    mpfr_t s;
    mpfr_init2(s, mpfr_get_prec(v_) + 8);
    mpfr_mul_2ui(s, v_, 120, MPFR_RNDN);
    mpz_t z, lo, hi;
    mpz_inits(z, lo, hi, nullptr);
    mpfr_get_z(z, s, MPFR_RNDZ);
    mpz_fdiv_r_2exp(lo, z, 64);
    mpz_fdiv_q_2exp(hi, z, 64);
    unsigned __int128 r =
        (static_cast<unsigned __int128>(mpz_get_ui(hi)) << 64) | mpz_get_ui(lo);
    mpz_clears(z, lo, hi, nullptr);
    mpfr_clear(s);
    return r;
}

std::string BigFloat::to_string(unsigned digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rf", static_cast<int>(digits), v_);
    std::string r(s);
    mpfr_free_str(s);
    return r;
}

BigFloat angle_to_float(const Angle& a, unsigned prec_bits) {
    assert(prec_bits >= 64);
    unsigned mbits = static_cast<unsigned>(boost::multiprecision::msb(
        a.m == 0 ? Int(1) : Int(boost::multiprecision::abs(a.m))));
    unsigned wp = prec_bits + 40 + mbits;

    mpfr_t t, acc;
    mpfr_init2(t, wp);
    mpfr_init2(acc, wp);
    mpfr_sqrt_ui(t, 5, MPFR_RNDN);
    mpfr_sub_ui(t, t, 1, MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    mpfr_mul_z(t, t, a.m.backend().data(), MPFR_RNDN);
    mpfr_set_q(acc, a.q.backend().data(), MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);

    Int f = exact_floor(a.q, a.m);
    mpfr_set_z(t, f.backend().data(), MPFR_RNDN);
    mpfr_sub(acc, acc, t, MPFR_RNDN);

    BigFloat r(prec_bits);
    mpfr_set(r.raw(), acc, MPFR_RNDN);
    if (mpfr_sgn(r.raw()) < 0) mpfr_set_zero(r.raw(), 1);
    if (mpfr_cmp_ui(r.raw(), 1) >= 0) {
        mpfr_set_ui(r.raw(), 1, MPFR_RNDN);
        mpfr_nextbelow(r.raw());
    }
    mpfr_clears(t, acc, nullptr);
    return r;
}

} // namespace twistlab
