#pragma once

#include "twistlab/bundle.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/sampling.hpp"

#include <string>

namespace twistlab {

// ---------------------------------------------------------------------------
// The two-point pair groupoid crossed with the base torus, and the twist
// over it glued from the chern-1 bundle and its conjugate. Arrows never
// move the base point; all the interest is in the two tags.

struct KGroupoidElement {
    BasePoint point;
    int r_tag = 0;
    int s_tag = 0;

    bool operator==(const KGroupoidElement& o) const {
        return point == o.point && r_tag == o.r_tag && s_tag == o.s_tag;
    }
};

KGroupoidElement k_g_unit(const BasePoint& p, int tag);
KGroupoidElement k_g_multiply(const KGroupoidElement& g1, const KGroupoidElement& g2);
KGroupoidElement k_g_inverse(const KGroupoidElement& g);
std::string to_string(const KGroupoidElement& g);

/// Twist element: a unit-tag arrow carries a bare circle phase in the
/// product bundle, the (0,1) arrows are chern-1 fiber points, the (1,0)
/// arrows live in the conjugate bundle. The tag pair pins the bundle.
struct KTwistElement {
    FiberPoint point;
    int r_tag = 0;
    int s_tag = 0;

    bool is_unit_tagged() const { return r_tag == s_tag; }
    bool operator==(const KTwistElement& o) const {
        return point == o.point && r_tag == o.r_tag && s_tag == o.s_tag;
    }
};

/// Chern number forced on the carried fiber point by a tag pair.
long k_tag_chern(int r_tag, int s_tag);

KTwistElement k_unit(const BasePoint& p, int tag, const Angle& phase = Angle());
/// Wraps a chern-1 fiber point as a (0,1) arrow; throws WrongBundle otherwise.
KTwistElement k_b_arrow(const FiberPoint& b);
/// Wraps a chern-(-1) fiber point as a (1,0) arrow; throws WrongBundle otherwise.
KTwistElement k_conj_arrow(const FiberPoint& c);

/// Tag-composable products over a common base point. Unit tags act on the
/// neighbouring arrow's phase; an opposite-tag pair collapses to a unit
/// whose phase is the pairing of the (0,1) point against the conjugate of
/// the (1,0) point. Throws NotComposable naming base points or tags.
KTwistElement k_multiply(const KTwistElement& e1, const KTwistElement& e2);

KTwistElement k_invert(const KTwistElement& e);
KTwistElement k_range(const KTwistElement& e);
KTwistElement k_source(const KTwistElement& e);

/// Central circle action, plain phase addition in every component.
KTwistElement k_act(const Angle& z, const KTwistElement& e);

KTwistElement k_iota(const BasePoint& p, int tag, const Angle& z);
KGroupoidElement k_pi(const KTwistElement& e);

std::string to_string(const KTwistElement& e);

// ---------------------------------------------------------------------------
// The contrast certificates: the twist is globally nontrivial, yet every
// isotropy arrow is a unit and the restriction there has an exact
// zero-phase section.

struct KContrastReport {
    bool isotropy_is_units = false;
    std::size_t section_checks = 0;
    bool section_multiplicative = false;
    long iso_certificate = 0;
    long full_certificate = 0;

    bool pass() const {
        return isotropy_is_units && section_multiplicative &&
               iso_certificate == 0 && full_certificate != 0;
    }
};

/// The explicit zero-phase section over the unit-tag arrows.
KTwistElement k_iso_zero_section(const KGroupoidElement& unit_arrow);

/// Tag table inspection plus sampled multiplicativity of the zero-phase
/// section, then both winding certificates.
KContrastReport k_effectiveness_check(std::uint64_t seed, std::size_t trials,
                                      std::size_t winding_samples = 1024);

/// Element draw across all four tag components.
KTwistElement k_draw(Sampler& rng);

} // namespace twistlab
