#include "twistlab/bundle.hpp"

#include <cassert>

namespace twistlab {

Angle pairing(const FiberPoint& p1, const FiberPoint& p2) {
    if (!(p1.bundle == p2.bundle))
        throw BaseMismatch("pairing of points in different bundles: L" +
                           std::to_string(p1.bundle.chern) + " vs L" +
                           std::to_string(p2.bundle.chern));
    if (!(p1.base == p2.base))
        throw BaseMismatch("pairing of points over different bases: " +
                           to_string(p1.base) + " vs " + to_string(p2.base));
    return p1.phase - p2.phase;
}

static const Rational kHalf(1, 2);
static const Rational kFiveEighths(5, 8);
static const Rational kEighth(1, 8);

bool in_chart(Chart c, const BasePoint& p) {
    if (c == Chart::zero)
        return compare_value_to(p.x, kFiveEighths) < 0;
    return compare_value_to(p.x, kHalf) >= 0 || compare_value_to(p.x, kEighth) < 0;
}

static bool in_seam_strip(const BasePoint& p) {
    return compare_value_to(p.x, kEighth) < 0;
}

static bool in_plain_strip(const BasePoint& p) {
    return compare_value_to(p.x, kHalf) >= 0 && compare_value_to(p.x, kFiveEighths) < 0;
}

bool in_overlap(const BasePoint& p) { return in_seam_strip(p) || in_plain_strip(p); }

FiberPoint LocalSection::at(const BasePoint& p) const {
    if (!in_chart(chart, p))
        throw NotInOverlap("section of chart " +
                           std::to_string(static_cast<int>(chart)) +
                           " evaluated outside its domain at x = " + to_string(p.x));
    if (chart == Chart::one && in_seam_strip(p))
        return FiberPoint{bundle, p, Angle(Rational(bundle.chern) * p.y)};
    return FiberPoint{bundle, p, Angle()};
}

Angle transition(const ClutchBundle& b, Chart from, Chart to, const BasePoint& p) {
    if (!in_chart(from, p) || !in_chart(to, p))
        throw NotInOverlap("transition requested outside the chart overlap at " +
                           to_string(p));
    return pairing(local_section(b, to).at(p), local_section(b, from).at(p));
}

long winding_number(const std::vector<Angle>& loop) {
    const std::size_t n = loop.size();
    if (n < 2) return 0;

    static const Rational kQuarter(1, 4);
    static const Rational kThreeQuarters(3, 4);

    // Exact lift: each step contributes its representative in
    // (-1/2, 1/2); the sum telescopes to an integer. Track the rational
    // parts, the theta coefficients and the subtracted floors separately.
    Rational q_sum(0);
    Int m_sum(0), floors(0);
    for (std::size_t i = 0; i < n; ++i) {
        Angle d = loop[(i + 1) % n] - loop[i];
        bool near_zero = compare_value_to(d, kQuarter) < 0;
        bool near_one = compare_value_to(d, kThreeQuarters) > 0;
        if (!near_zero && !near_one)
            throw SamplingTooCoarse("consecutive winding samples " +
                                    std::to_string(i) + " -> " +
                                    std::to_string((i + 1) % n) +
                                    " are at least a quarter turn apart");
        q_sum += d.q;
        m_sum += d.m;
        floors += exact_floor(d.q, d.m);
        if (near_one) ++floors;
    }
    assert(m_sum == 0);
    assert(den(q_sum) == 1);
    Int w = num(q_sum) - floors;
    return static_cast<long>(w);
}

long chern_by_winding(const ClutchBundle& b, std::size_t samples) {
    const BasePoint probe_x(Angle(Rational(1, 16)), Rational(0));
    std::vector<Angle> loop;
    loop.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        BasePoint p(probe_x.x, Rational(Int(k), Int(samples)));
        loop.push_back(transition(b, Chart::zero, Chart::one, p));
    }
    return winding_number(loop);
}

GlobalSectionResult global_section(const ClutchBundle& b, std::size_t samples) {
    GlobalSectionResult r;
    r.obstruction = chern_by_winding(b, samples);
    if (r.obstruction != 0) return r;

    // The constant section is continuous iff its jump across the seam,
    // chern * y in canonical coordinates, vanishes for every y. Checked
    // exactly at the sampled heights.
    std::size_t ok = 0;
    for (std::size_t k = 0; k < samples; ++k) {
        Angle jump(Rational(b.chern) * Rational(Int(k), Int(samples)));
        if (jump.is_zero()) ++ok;
    }
    r.certificate = SeamCertificate{samples, ok == samples};
    if (r.certificate.exact) r.section = GlobalZeroSection{b};
    return r;
}

std::string to_string(const FiberPoint& p) {
    return "L" + std::to_string(p.bundle.chern) + "@(" + to_string(p.base.x) +
           "; " + to_string(p.base.y) + "; " + to_string(p.phase) + ")";
}

} // namespace twistlab
