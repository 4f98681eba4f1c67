#include "twistlab/kumjian.hpp"

namespace twistlab {

KGroupoidElement k_g_unit(const BasePoint& p, int tag) {
    return KGroupoidElement{p, tag, tag};
}

KGroupoidElement k_g_multiply(const KGroupoidElement& g1, const KGroupoidElement& g2) {
    if (!(g1.point == g2.point))
        throw NotComposable("arrows over " + to_string(g1.point) + " and " +
                            to_string(g2.point) + " sit over different points");
    if (g1.s_tag != g2.r_tag)
        throw NotComposable("source tag " + std::to_string(g1.s_tag) +
                            " does not meet range tag " + std::to_string(g2.r_tag));
    return KGroupoidElement{g1.point, g1.r_tag, g2.s_tag};
}

KGroupoidElement k_g_inverse(const KGroupoidElement& g) {
    return KGroupoidElement{g.point, g.s_tag, g.r_tag};
}

std::string to_string(const KGroupoidElement& g) {
    return "(" + to_string(g.point) + ", " + std::to_string(g.r_tag) + "<-" +
           std::to_string(g.s_tag) + ")";
}

long k_tag_chern(int r_tag, int s_tag) {
    if (r_tag == s_tag) return 0;
    return r_tag == 0 ? 1 : -1;
}

KTwistElement k_unit(const BasePoint& p, int tag, const Angle& phase) {
    return KTwistElement{FiberPoint{ClutchBundle{0}, p, phase}, tag, tag};
}

KTwistElement k_b_arrow(const FiberPoint& b) {
    if (b.bundle.chern != 1)
        throw WrongBundle(1, "forward arrow needs a chern-1 point, got L" +
                                 std::to_string(b.bundle.chern));
    return KTwistElement{b, 0, 1};
}

KTwistElement k_conj_arrow(const FiberPoint& c) {
    if (c.bundle.chern != -1)
        throw WrongBundle(1, "backward arrow needs a chern-(-1) point, got L" +
                                 std::to_string(c.bundle.chern));
    return KTwistElement{c, 1, 0};
}

KTwistElement k_multiply(const KTwistElement& e1, const KTwistElement& e2) {
    if (!(e1.point.base == e2.point.base))
        throw NotComposable("elements over " + to_string(e1.point.base) + " and " +
                            to_string(e2.point.base) + " sit over different points");
    if (e1.s_tag != e2.r_tag)
        throw NotComposable("source tag " + std::to_string(e1.s_tag) +
                            " does not meet range tag " + std::to_string(e2.r_tag));
    if (e1.is_unit_tagged())
        return KTwistElement{act(e1.point.phase, e2.point), e2.r_tag, e2.s_tag};
    if (e2.is_unit_tagged())
        return KTwistElement{act(e2.point.phase, e1.point), e1.r_tag, e1.s_tag};
    if (e1.r_tag == 0)
        return k_unit(e1.point.base, 0, pairing(e1.point, conjugate(e2.point)));
    return k_unit(e1.point.base, 1, pairing(e2.point, conjugate(e1.point)));
}

KTwistElement k_invert(const KTwistElement& e) {
    if (e.is_unit_tagged())
        return k_unit(e.point.base, e.r_tag, -e.point.phase);
    return KTwistElement{conjugate(e.point), e.s_tag, e.r_tag};
}

KTwistElement k_range(const KTwistElement& e) {
    return k_unit(e.point.base, e.r_tag, Angle());
}

KTwistElement k_source(const KTwistElement& e) {
    return k_unit(e.point.base, e.s_tag, Angle());
}

KTwistElement k_act(const Angle& z, const KTwistElement& e) {
    return KTwistElement{act(z, e.point), e.r_tag, e.s_tag};
}

KTwistElement k_iota(const BasePoint& p, int tag, const Angle& z) {
    return k_unit(p, tag, z);
}

KGroupoidElement k_pi(const KTwistElement& e) {
    return KGroupoidElement{e.point.base, e.r_tag, e.s_tag};
}

std::string to_string(const KTwistElement& e) {
    return "<" + to_string(e.point) + ", " + std::to_string(e.r_tag) + "<-" +
           std::to_string(e.s_tag) + ">";
}

KTwistElement k_iso_zero_section(const KGroupoidElement& unit_arrow) {
    return k_unit(unit_arrow.point, unit_arrow.r_tag, Angle());
}

KContrastReport k_effectiveness_check(std::uint64_t seed, std::size_t trials,
                                      std::size_t winding_samples) {
    KContrastReport report;

    // The four tag pairs are the whole arrow table fibrewise; an arrow is
    // isotropic exactly when its tags agree, which is the unit case.
    report.isotropy_is_units = true;
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
            if (r == s && k_tag_chern(r, s) != 0) report.isotropy_is_units = false;

    report.section_multiplicative = true;
    for (std::size_t i = 0; i < trials; ++i) {
        Sampler rng(seed, i);
        BasePoint p = rng.base_point();
        int tag = static_cast<int>(rng.below(2));
        KGroupoidElement u = k_g_unit(p, tag);
        KTwistElement lifted = k_iso_zero_section(u);
        KTwistElement square = k_multiply(lifted, lifted);
        if (!(square == lifted) || !(k_pi(lifted) == u) ||
            !(k_invert(lifted) == lifted))
            report.section_multiplicative = false;
        ++report.section_checks;
    }

    std::vector<Angle> flat(winding_samples, Angle());
    report.iso_certificate = winding_number(flat);
    report.full_certificate = chern_by_winding(ClutchBundle{1}, winding_samples);
    return report;
}

KTwistElement k_draw(Sampler& rng) {
    switch (rng.below(4)) {
    case 0: return k_unit(rng.base_point(), 0, rng.angle());
    case 1: return k_unit(rng.base_point(), 1, rng.angle());
    case 2:
        return k_b_arrow(FiberPoint{ClutchBundle{1}, rng.base_point(), rng.angle()});
    default:
        return k_conj_arrow(
            FiberPoint{ClutchBundle{-1}, rng.base_point(), rng.angle()});
    }
}

} // namespace twistlab
