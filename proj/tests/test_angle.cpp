#include <doctest.h>

#include "twistlab/angle.hpp"
#include "twistlab/sampling.hpp"

using namespace twistlab;

// Reference digits computed independently with integer square roots
// (floor(sqrt(5*10^124))), frozen here. theta = (sqrt(5)-1)/2.
static const char* kThetaDigits =
    "0.61803398874989484820458683436563811772030917980576286213544862";
static const char* kTwoThetaFracDigits =
    "0.23606797749978969640917366873127623544061835961152572427089724";

static Rational rat(long n, long d) { return Rational(n, d); }

TEST_CASE("angle normalization keeps q in [0,1) and never folds m") {
    Angle a(rat(7, 4), 3);
    CHECK(a.q == rat(3, 4));
    CHECK(a.m == 3);
    Angle b(rat(-1, 4), -2);
    CHECK(b.q == rat(3, 4));
    CHECK(b.m == -2);
}

TEST_CASE("circle addition") {
    CHECK(Angle(rat(1, 3)) + Angle(rat(2, 3)) == Angle(Rational(0)));
    CHECK(Angle(Rational(0), 1) + Angle(Rational(0), -1) == Angle(Rational(0)));
    // expected value from plain rational addition: 1/4 + 5/6 = 13/12 -> 1/12
    Angle sum = Angle(rat(1, 4), 2) + Angle(rat(5, 6), 1);
    CHECK(sum.q == mod1(rat(1, 4) + rat(5, 6)));
    CHECK(sum == Angle(rat(1, 12), 3));
}

TEST_CASE("circle negation") {
    CHECK(-Angle(Rational(0)) == Angle(Rational(0)));
    CHECK(-Angle(rat(1, 3)) == Angle(rat(2, 3)));
    Angle a(rat(1, 4), 2);
    CHECK(-a == Angle(rat(3, 4), -2));
    CHECK((a + (-a)).is_zero());
}

TEST_CASE("addition is associative and commutative on random angles") {
    Sampler rng(11, 0);
    for (int i = 0; i < 2000; ++i) {
        Angle a = rng.angle(), b = rng.angle(), c = rng.angle();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
    }
}

TEST_CASE("representation equality is value equality") {
    // m*theta mod 1 is never rational for m != 0, so distinct (q, m) pairs
    // denote distinct circle points. Checked exactly via the comparator.
    Sampler rng(12, 0);
    for (int i = 0; i < 2000; ++i) {
        Angle a = rng.angle(), b = rng.angle();
        if (a == b)
            CHECK(compare_values(a, b) == 0);
        else
            CHECK(compare_values(a, b) != 0);
    }
    // direct instance: q + m*theta vs q' rational
    CHECK(compare_values(Angle(rat(1, 2), 1), Angle(rat(1, 2))) != 0);
}

TEST_CASE("exact floor of q + m*theta") {
    CHECK(exact_floor(Rational(0), 1) == 0);   // theta ~ 0.618
    CHECK(exact_floor(Rational(0), 2) == 1);   // 2theta ~ 1.236
    CHECK(exact_floor(Rational(0), -1) == -1); // -theta ~ -0.618
    CHECK(exact_floor(rat(1, 2), 1) == 1);     // 1.118
    CHECK(exact_floor(rat(1, 2), 0) == 0);
    CHECK(exact_floor(rat(1, 2), -3) == -2);   // 0.5 - 1.854 = -1.354
}

TEST_CASE("value comparator against high-precision floats") {
    Sampler rng(13, 0);
    BigFloat eps = BigFloat::two_pow(-90);
    for (int i = 0; i < 500; ++i) {
        Angle a = rng.angle(), b = rng.angle();
        BigFloat fa = angle_to_float(a, 128), fb = angle_to_float(b, 128);
        BigFloat d = fa - fb;
        if (d.abs().compare(eps) > 0) {
            int want = d.compare(BigFloat::from_rational(Rational(0), 64));
            CHECK(compare_values(a, b) == want);
        }
    }
}

TEST_CASE("float evaluation matches frozen reference digits") {
    BigFloat eps = BigFloat::two_pow(-96);
    BigFloat theta = angle_to_float(Angle(Rational(0), 1), 128);
    BigFloat ref = BigFloat::from_decimal(kThetaDigits, 192);
    CHECK((theta - ref).abs().compare(eps) < 0);

    BigFloat t2 = angle_to_float(Angle(Rational(0), 2), 128);
    BigFloat ref2 = BigFloat::from_decimal(kTwoThetaFracDigits, 192);
    CHECK((t2 - ref2).abs().compare(eps) < 0);

    BigFloat half = angle_to_float(Angle(rat(1, 2)), 128);
    CHECK(half.compare(BigFloat::from_rational(rat(1, 2), 128)) == 0);
}

TEST_CASE("float evaluation is a homomorphism up to precision") {
    Sampler rng(14, 0);
    BigFloat tol = BigFloat::two_pow(-60);
    for (int i = 0; i < 400; ++i) {
        Angle a = rng.angle(), b = rng.angle();
        BigFloat lhs = angle_to_float(a + b, 128);
        BigFloat rhs = (angle_to_float(a, 128) + angle_to_float(b, 128)).fractional();
        BigFloat d = (lhs - rhs).abs();
        // representatives may sit on opposite ends of [0,1)
        BigFloat d1 = (lhs - rhs + BigFloat::from_rational(Rational(1), 128)).abs();
        BigFloat d2 = (lhs - rhs - BigFloat::from_rational(Rational(1), 128)).abs();
        bool ok = d.compare(tol) < 0 || d1.compare(tol) < 0 || d2.compare(tol) < 0;
        CHECK(ok);
    }
}

TEST_CASE("rotation of the base torus") {
    BasePoint p(Angle(Rational(0)), Rational(0));
    BasePoint q = rotate_x(p);
    CHECK(q.x == Angle(Rational(0), 1));
    CHECK(q.y == 0);
    CHECK(rotate_x(q, -1) == p);
    BasePoint five = rotate_x(p, 5);
    CHECK(five.x.m == 5);
}

TEST_CASE("scaling by integers") {
    Angle a(rat(3, 8), 1);
    CHECK(scale(Int(0), a).is_zero());
    CHECK(scale(Int(2), a) == a + a);
    CHECK(scale(Int(-3), a) == -(a + a + a));
}

TEST_CASE("rendering of angles and base points") {
    CHECK(to_string(Angle(rat(1, 4))) == "1/4");
    CHECK(to_string(Angle(Rational(0))) == "0");
    CHECK(to_string(Angle(rat(1, 4), 2)) == "1/4 + 2*theta");
    CHECK(to_string(Angle(rat(1, 4), -2)) == "1/4 - 2*theta");
    CHECK(to_string(BasePoint(Angle(rat(1, 4), 1), rat(2, 3))) ==
          "(1/4 + 1*theta; 2/3)");
}
