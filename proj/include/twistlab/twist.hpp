#pragma once

#include "twistlab/bundle.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/sampling.hpp"
#include "twistlab/word.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace twistlab {

// ---------------------------------------------------------------------------
// Letter bundles and the base action.
//
// Each letter carries a clutched line bundle: a and its inverse the product
// bundle, b the chern-1 bundle, b^-1 its conjugate. Stored phases always
// transform by plain addition under the circle action; the conjugation data
// of the inverse letters lives entirely in the bar map and in the sign
// relating stored phases to conjugate-bundle coordinates.

ClutchBundle letter_bundle(Letter d);

/// +1 when the stored phase is the bundle coordinate itself, -1 when it is
/// its negative (inverse letters).
int letter_action_sign(Letter d);

/// Base translation attached to a letter: a steps the x coordinate by
/// theta, its inverse steps back, b-letters act trivially.
BasePoint alpha(Letter d, const BasePoint& p);

/// Word action, x shifted by the a-exponent. A left action.
inline BasePoint alpha(const Word& w, const BasePoint& p) {
    return rotate_x(p, Int(w.a_exponent()));
}

/// Conjugation of a single letter entry: lands in the inverse letter's
/// bundle, negates the stored phase and shifts the base through the
/// letter's own translation.
FiberPoint bar_letter(Letter d, const FiberPoint& c);

// ---------------------------------------------------------------------------
// Tuples over a word and their gauge classes.

/// Entry chain over a reduced word: entry i lives in letter i's bundle and
/// the base points satisfy base(i) = alpha(w_{i+1}, base(i+1)). The empty
/// word is carried by a single product-bundle entry.
struct TupleElement {
    Word word;
    std::vector<FiberPoint> entries;
};

/// Validates bundles and the base chain. Throws WrongBundle (1-based entry
/// index) or ChainMismatch (1-based index of the failing chain equation).
TupleElement validate_tuple(const Word& word, std::vector<FiberPoint> entries);

/// Base point of the tuple as an element over the word grading: the base
/// of the last entry.
const BasePoint& tuple_base(const TupleElement& t);

/// Gauge action: shifts entry i by zs[i]; the shifts must sum to zero.
TupleElement gauge_act(const TupleElement& t, const std::vector<Angle>& zs);

/// Orbit of a tuple under the gauge action, written canonically: the word,
/// the base of the last entry, and the total stored phase.
struct ClassRep {
    Word word;
    BasePoint base;
    Angle phase;

    bool operator==(const ClassRep& o) const {
        return word == o.word && base == o.base && phase == o.phase;
    }
};

ClassRep canonicalize(const TupleElement& t);

/// Representative tuple with all phase pushed to the last entry.
TupleElement canonical_tuple(const ClassRep& c);

/// Circle action through the last entry.
inline ClassRep act(const Angle& z, const ClassRep& c) {
    return ClassRep{c.word, c.base, c.phase + z};
}

/// Entrywise conjugation in reverse order.
TupleElement tuple_bar(const TupleElement& t);

/// Conjugate class: inverse word, base moved by the word action, phase
/// negated.
ClassRep bar(const ClassRep& c);

/// Product of tuple classes: cancels inverse letter pairs at the inner
/// boundary one at a time through the letter pairing, then concatenates.
/// Requires tuple_base(L) = alpha(R.word, tuple_base(R)); throws
/// NotComposable naming both base points.
ClassRep reduce_product(const TupleElement& L, const TupleElement& R);

/// Same product on canonical representatives.
ClassRep multiply_classes(const ClassRep& c1, const ClassRep& c2);

/// "[w | x ; y | phase]"
std::string to_string(const ClassRep& c);

// ---------------------------------------------------------------------------
// The twist groupoid: classes graded by words, multiplied by cancellation.

struct TwistElement {
    ClassRep cls;

    const Word& word() const { return cls.word; }
    const BasePoint& base() const { return cls.base; }
    const Angle& phase() const { return cls.phase; }
    bool operator==(const TwistElement& o) const { return cls == o.cls; }
};

TwistElement operator*(const TwistElement& e1, const TwistElement& e2);
TwistElement inverse(const TwistElement& e);
TwistElement unit_twist(const BasePoint& p);
TwistElement range_of(const TwistElement& e);
TwistElement source_of(const TwistElement& e);

inline TwistElement act(const Angle& z, const TwistElement& e) {
    return TwistElement{act(z, e.cls)};
}

inline std::string to_string(const TwistElement& e) { return to_string(e.cls); }

// ---------------------------------------------------------------------------
// The transformation groupoid downstairs and the bundle map onto it.

struct GroupoidElement {
    BasePoint range;
    Word word;
    BasePoint source;

    bool operator==(const GroupoidElement& o) const {
        return range == o.range && word == o.word && source == o.source;
    }
};

/// Arrow with the stated source; the range is the word action of it.
GroupoidElement g_element(const Word& w, const BasePoint& source);
GroupoidElement g_unit(const BasePoint& p);
GroupoidElement g_multiply(const GroupoidElement& g1, const GroupoidElement& g2);
GroupoidElement g_inverse(const GroupoidElement& g);
std::string to_string(const GroupoidElement& g);

/// Central circle inclusion over the unit space.
TwistElement iota(const BasePoint& p, const Angle& z);

/// Projection onto the transformation groupoid; a homomorphism whose
/// kernel is exactly the image of iota.
GroupoidElement pi(const TwistElement& e);

/// An arrow has equal range and source exactly when its word has
/// a-exponent zero; the rotation part of the action is free.
bool in_isotropy_interior(const Word& w);
bool in_isotropy_interior(const GroupoidElement& g);

// ---------------------------------------------------------------------------
// Restriction to a word filter and the integer obstruction.

/// Chern number of the class bundle over one word's component, computed
/// by composing the letter bundles' seam transitions and winding the
/// result along the y loop.
long word_obstruction(const Word& w, std::size_t samples = 1024);

/// Closed form of the same integer: the b-exponent.
inline long chern_number(const Word& w) { return w.b_exponent(); }

/// Sub-twist over the words a filter keeps. Construction searches for
/// closure violations among filtered words up to the given length and
/// throws NotSubgroupoid with a witness if the products or inverses leak.
class RestrictedTwist {
  public:
    RestrictedTwist(std::function<bool(const Word&)> filter, std::string name,
                    std::size_t closure_search_len = 4);

    const std::string& name() const { return name_; }
    bool contains(const Word& w) const { return filter_(w); }

    /// Members of the filter among all reduced words up to max_len.
    std::vector<Word> words_up_to(std::size_t max_len) const;

    /// Multiplication inherited from the ambient twist; operands must be
    /// graded by filtered words.
    TwistElement multiply(const TwistElement& e1, const TwistElement& e2) const;
    TwistElement invert(const TwistElement& e) const;

    long obstruction_certificate(const Word& w, std::size_t samples = 1024) const;

  private:
    std::function<bool(const Word&)> filter_;
    std::string name_;
};

RestrictedTwist full_twist();
RestrictedTwist isotropy_restriction();

// ---------------------------------------------------------------------------
// 2-cocycles and the twists they induce.

struct TwoCocycle {
    std::string name;
    std::function<Angle(const GroupoidElement&, const GroupoidElement&)> eval;
};

TwoCocycle zero_cocycle();
/// sigma(g1, g2) = a_exponent(g1) * b_exponent(g2) * weight.
TwoCocycle bilinear_cocycle(const Rational& weight);

/// Searches sampled composable triples for a cocycle-identity violation
/// and sampled arrows for a unit-normalization violation; returns the
/// rendered witness, or nothing.
std::optional<std::string> cocycle_identity_witness(const TwoCocycle& sigma,
                                                    std::uint64_t seed,
                                                    std::size_t trials);

struct CocycleElement {
    GroupoidElement g;
    Angle t;
    bool operator==(const CocycleElement& o) const { return g == o.g && t == o.t; }
};

std::string to_string(const CocycleElement& e);

/// Product twist attached to a 2-cocycle: the product space with
/// multiplication skewed by sigma. Its class bundles are trivial, which
/// the obstruction certificate reproduces as winding zero.
class CocycleTwist {
  public:
    explicit CocycleTwist(TwoCocycle sigma) : sigma_(std::move(sigma)) {}

    const TwoCocycle& cocycle() const { return sigma_; }

    CocycleElement multiply(const CocycleElement& e1, const CocycleElement& e2) const;
    CocycleElement invert(const CocycleElement& e) const;
    CocycleElement iota(const BasePoint& p, const Angle& z) const;
    GroupoidElement pi(const CocycleElement& e) const { return e.g; }
    CocycleElement range_of(const CocycleElement& e) const;
    CocycleElement source_of(const CocycleElement& e) const;
    CocycleElement canonical_section(const GroupoidElement& g) const {
        return CocycleElement{g, Angle()};
    }

    long obstruction_certificate(const Word& w, std::size_t samples = 1024) const;

  private:
    TwoCocycle sigma_;
};

/// Validates the sampled cocycle identity first; throws
/// CocycleIdentityViolated with the witness triple otherwise.
CocycleTwist build_cocycle_twist(const TwoCocycle& sigma, std::uint64_t seed,
                                 std::size_t trials);

using TwistSection = std::function<TwistElement(const GroupoidElement&)>;
using CocycleSection = std::function<CocycleElement(const GroupoidElement&)>;

/// Cocycle measured by a set-theoretic section of the restricted twist:
/// sigma(g1, g2) is the central phase of S(g1) S(g2) S(g1 g2)^-1. The
/// section identity pi(S(g)) = g is checked on sampled arrows with words
/// from the filter; throws NotASection on a violation.
TwoCocycle cocycle_from_section(const RestrictedTwist& tw, const TwistSection& S,
                                std::uint64_t seed, std::size_t trials,
                                std::size_t word_len = 3);

/// Same extraction over a cocycle twist.
TwoCocycle cocycle_from_section(const CocycleTwist& tw, const CocycleSection& S,
                                std::uint64_t seed, std::size_t trials,
                                std::size_t word_len = 3);

// ---------------------------------------------------------------------------
// Orbit density of the rotation part.

struct OrbitReport {
    std::size_t iterations = 0;
    double max_gap = 0.0;
    double bound = 0.0;
    bool pass = false;
};

/// Sorts the first n points of the rotation orbit of 0 and measures the
/// largest circular gap against the bound 10/n. Points are evaluated
/// independently in 128-bit floats (parallelized when OpenMP is on).
OrbitReport orbit_report(std::size_t n, const Angle& rotation = Angle(Rational(0), 1));

/// Reference implementation that accumulates the rotation incrementally
/// instead; kept for cross-checking the direct evaluation.
OrbitReport orbit_report_serial(std::size_t n,
                                const Angle& rotation = Angle(Rational(0), 1));

// ---------------------------------------------------------------------------
// Element draws for tests and verification suites.

FiberPoint draw_letter_point(Sampler& rng, Letter d);
ClassRep draw_class(Sampler& rng, const Word& w);
TupleElement draw_tuple(Sampler& rng, const Word& w);
/// Pair with matching boundary bases, left word w1, right word w2.
std::pair<TwistElement, TwistElement> draw_composable(Sampler& rng, const Word& w1,
                                                      const Word& w2);
GroupoidElement draw_arrow(Sampler& rng, std::size_t word_len = 4);
/// Composable groupoid pair/triple with word lengths up to word_len each.
std::pair<GroupoidElement, GroupoidElement> draw_g_pair(Sampler& rng,
                                                        std::size_t word_len = 3);

} // namespace twistlab
