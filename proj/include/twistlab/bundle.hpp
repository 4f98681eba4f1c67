#pragma once

#include "twistlab/angle.hpp"
#include "twistlab/errors.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace twistlab {

/// Principal circle bundle over the 2-torus presented by clutching: cut
/// the torus along the circle x = 0 and reglue with the fibre rotated by
/// chern * y. chern = 0 is the product bundle.
struct ClutchBundle {
    long chern = 0;
    bool operator==(const ClutchBundle& o) const { return chern == o.chern; }
};

/// Total-space point in canonical coordinates: the phase is measured
/// against the set-theoretic unit section over the cut square x in [0,1).
/// That section is discontinuous at the seam, so equal coordinates on
/// both sides of x = 0 denote different points unless chern * y = 0.
struct FiberPoint {
    ClutchBundle bundle;
    BasePoint base;
    Angle phase;

    bool operator==(const FiberPoint& o) const {
        return bundle == o.bundle && base == o.base && phase == o.phase;
    }
};

/// Circle action: adds z to the canonical phase.
inline FiberPoint act(const Angle& z, const FiberPoint& p) {
    return FiberPoint{p.bundle, p.base, p.phase + z};
}

/// Unique z with act(z, p2) == p1. Throws BaseMismatch unless both points
/// share the bundle and the base point.
Angle pairing(const FiberPoint& p1, const FiberPoint& p2);

/// Conjugate bundle point: chern and phase negate, the base stays put.
inline FiberPoint conjugate(const FiberPoint& p) {
    return FiberPoint{ClutchBundle{-p.bundle.chern}, p.base, -p.phase};
}

/// Two-chart cover of the torus in the x direction, overlap width 1/8.
/// Chart 0 covers x in [0, 5/8); chart 1 covers x in [1/2, 9/8) and
/// crosses the seam. The overlap has two strips: the plain strip
/// [1/2, 5/8) and the seam strip [0, 1/8).
enum class Chart { zero = 0, one = 1 };

bool in_chart(Chart c, const BasePoint& p);
bool in_overlap(const BasePoint& p);

/// Continuous section of the bundle over one chart. Chart 0 carries the
/// canonical phase 0; chart 1 carries phase 0 before the seam and phase
/// chern * y after crossing it, which is what continuity through the
/// regluing demands.
struct LocalSection {
    ClutchBundle bundle;
    Chart chart;
    FiberPoint at(const BasePoint& p) const;
};

inline LocalSection local_section(const ClutchBundle& b, Chart c) {
    return LocalSection{b, c};
}

/// Transition value from one chart's section to the other at p, i.e.
/// pairing(section(to).at(p), section(from).at(p)). Antisymmetric in the
/// charts; equals chern * y on the seam strip and 0 on the plain strip.
Angle transition(const ClutchBundle& b, Chart from, Chart to, const BasePoint& p);

/// Integer winding of a closed loop of circle values, by exact lifting.
/// Consecutive gaps (including the wrap-around step) must stay below 1/4
/// or the lift is not determined; throws SamplingTooCoarse then.
long winding_number(const std::vector<Angle>& loop);

/// Chern number recovered from the geometry alone: sample the seam
/// transition along the y loop and wind. Independent of the stored
/// integer, which it must reproduce.
long chern_by_winding(const ClutchBundle& b, std::size_t samples = 1024);

/// Exact seam-consistency record for a section candidate.
struct SeamCertificate {
    std::size_t checked = 0;
    bool exact = false;
};

/// Constant-phase section over the whole torus; only continuous when the
/// seam jump vanishes identically.
struct GlobalZeroSection {
    ClutchBundle bundle;
    FiberPoint at(const BasePoint& p) const { return FiberPoint{bundle, p, Angle()}; }
};

struct GlobalSectionResult {
    long obstruction = 0;
    std::optional<GlobalZeroSection> section;
    SeamCertificate certificate;
};

/// Decides global triviality by the winding certificate. When the
/// obstruction vanishes the returned section's seam jumps are checked
/// exactly at the sampled y values.
GlobalSectionResult global_section(const ClutchBundle& b, std::size_t samples = 1024);

/// "L<n>@(x; y; phase)"
std::string to_string(const FiberPoint& p);

} // namespace twistlab
