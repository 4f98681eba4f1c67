#include "twistlab/twist.hpp"

#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twistlab {

ClutchBundle letter_bundle(Letter d) {
    switch (d) {
    case Letter::b: return ClutchBundle{1};
    case Letter::B: return ClutchBundle{-1};
    default: return ClutchBundle{0};
    }
}

int letter_action_sign(Letter d) {
    return (d == Letter::A || d == Letter::B) ? -1 : 1;
}

BasePoint alpha(Letter d, const BasePoint& p) {
    switch (d) {
    case Letter::a: return rotate_x(p, 1);
    case Letter::A: return rotate_x(p, -1);
    default: return p;
    }
}

FiberPoint bar_letter(Letter d, const FiberPoint& c) {
    assert(c.bundle == letter_bundle(d));
    FiberPoint conj = conjugate(c);
    return FiberPoint{conj.bundle, alpha(d, conj.base), conj.phase};
}

// ---------------------------------------------------------------------------
// Tuples

TupleElement validate_tuple(const Word& word, std::vector<FiberPoint> entries) {
    if (word.empty()) {
        if (entries.size() != 1)
            throw WrongBundle(1, "empty word needs exactly one unit entry, got " +
                                     std::to_string(entries.size()));
        if (entries[0].bundle.chern != 0)
            throw WrongBundle(1, "unit entry must live in L0, got L" +
                                     std::to_string(entries[0].bundle.chern));
        return TupleElement{word, std::move(entries)};
    }
    if (entries.size() != word.size())
        throw WrongBundle(1, "word of length " + std::to_string(word.size()) +
                                 " with " + std::to_string(entries.size()) +
                                 " entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!(entries[i].bundle == letter_bundle(word[i])))
            throw WrongBundle(i + 1, "entry " + std::to_string(i + 1) +
                                         " sits in L" +
                                         std::to_string(entries[i].bundle.chern) +
                                         ", letter '" + to_char(word[i]) +
                                         "' needs L" +
                                         std::to_string(letter_bundle(word[i]).chern));
    }
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        if (!(entries[i].base == alpha(word[i + 1], entries[i + 1].base)))
            throw ChainMismatch(
                i + 1, "chain break between entries " + std::to_string(i + 1) +
                           " and " + std::to_string(i + 2) + ": " +
                           to_string(entries[i].base) + " vs shifted " +
                           to_string(alpha(word[i + 1], entries[i + 1].base)));
    }
    return TupleElement{word, std::move(entries)};
}

const BasePoint& tuple_base(const TupleElement& t) { return t.entries.back().base; }

TupleElement gauge_act(const TupleElement& t, const std::vector<Angle>& zs) {
    if (zs.size() != t.entries.size())
        throw std::invalid_argument("gauge vector length mismatch");
    Angle sum;
    for (const Angle& z : zs) sum = sum + z;
    if (!sum.is_zero())
        throw std::invalid_argument("gauge shifts must sum to zero, got " +
                                    to_string(sum));
    TupleElement r = t;
    for (std::size_t i = 0; i < zs.size(); ++i)
        r.entries[i].phase = r.entries[i].phase + zs[i];
    return r;
}

ClassRep canonicalize(const TupleElement& t) {
    Angle total;
    for (const FiberPoint& c : t.entries) total = total + c.phase;
    return ClassRep{t.word, tuple_base(t), total};
}

TupleElement canonical_tuple(const ClassRep& c) {
    if (c.word.empty())
        return TupleElement{c.word,
                            {FiberPoint{ClutchBundle{0}, c.base, c.phase}}};
    std::vector<FiberPoint> entries(c.word.size());
    BasePoint base = c.base;
    for (std::size_t i = c.word.size(); i-- > 0;) {
        entries[i] = FiberPoint{letter_bundle(c.word[i]), base, Angle()};
        if (i > 0) base = alpha(c.word[i], base);
    }
    entries.back().phase = c.phase;
    return TupleElement{c.word, std::move(entries)};
}

TupleElement tuple_bar(const TupleElement& t) {
    if (t.word.empty()) {
        FiberPoint e = t.entries[0];
        return TupleElement{t.word, {conjugate(e)}};
    }
    std::vector<FiberPoint> entries;
    entries.reserve(t.entries.size());
    for (std::size_t i = t.entries.size(); i-- > 0;)
        entries.push_back(bar_letter(t.word[i], t.entries[i]));
    return TupleElement{t.word.inverse(), std::move(entries)};
}

ClassRep bar(const ClassRep& c) {
    return canonicalize(tuple_bar(canonical_tuple(c)));
}

ClassRep reduce_product(const TupleElement& L, const TupleElement& R) {
    const BasePoint right_base = tuple_base(R);
    if (!(tuple_base(L) == alpha(R.word, right_base)))
        throw NotComposable("left element over " + to_string(tuple_base(L)) +
                            " does not compose with right element over " +
                            to_string(right_base) + " along word " +
                            to_string(R.word));

    Angle z_acc;
    std::vector<Letter> lw, rw;
    std::vector<FiberPoint> le, re;
    if (L.word.empty())
        z_acc = z_acc + L.entries[0].phase;
    else {
        lw = L.word.letters();
        le = L.entries;
    }
    if (R.word.empty())
        z_acc = z_acc + R.entries[0].phase;
    else {
        rw = R.word.letters();
        re = R.entries;
    }

    // Inner-boundary cancellation: each inverse pair collapses to the
    // central phase measured by the letter pairing against the conjugated
    // partner, which the remaining product absorbs.
    while (!lw.empty() && !rw.empty() && rw.front() == inverse(lw.back())) {
        z_acc = z_acc + pairing(le.back(), bar_letter(rw.front(), re.front()));
        lw.pop_back();
        le.pop_back();
        rw.erase(rw.begin());
        re.erase(re.begin());
    }

    std::vector<Letter> glued = lw;
    glued.insert(glued.end(), rw.begin(), rw.end());
    Word word = Word::reduce(glued);
    assert(word.size() == lw.size() + rw.size());

    if (word.empty()) return ClassRep{word, right_base, z_acc};

    Angle total = z_acc;
    for (const FiberPoint& c : le) total = total + c.phase;
    for (const FiberPoint& c : re) total = total + c.phase;
    return ClassRep{word, right_base, total};
}

ClassRep multiply_classes(const ClassRep& c1, const ClassRep& c2) {
    return reduce_product(canonical_tuple(c1), canonical_tuple(c2));
}

std::string to_string(const ClassRep& c) {
    return "[" + to_string(c.word) + " | " + to_string(c.base.x) + " ; " +
           to_string(c.base.y) + " | " + to_string(c.phase) + "]";
}

// ---------------------------------------------------------------------------
// Twist groupoid operations

TwistElement operator*(const TwistElement& e1, const TwistElement& e2) {
    return TwistElement{multiply_classes(e1.cls, e2.cls)};
}

TwistElement inverse(const TwistElement& e) { return TwistElement{bar(e.cls)}; }

TwistElement unit_twist(const BasePoint& p) {
    return TwistElement{ClassRep{Word(), p, Angle()}};
}

TwistElement range_of(const TwistElement& e) {
    return unit_twist(alpha(e.word(), e.base()));
}

TwistElement source_of(const TwistElement& e) { return unit_twist(e.base()); }

// ---------------------------------------------------------------------------
// Transformation groupoid

GroupoidElement g_element(const Word& w, const BasePoint& source) {
    return GroupoidElement{alpha(w, source), w, source};
}

GroupoidElement g_unit(const BasePoint& p) { return GroupoidElement{p, Word(), p}; }

GroupoidElement g_multiply(const GroupoidElement& g1, const GroupoidElement& g2) {
    if (!(g1.source == g2.range))
        throw NotComposable("arrow into " + to_string(g1.source) +
                            " does not compose with arrow out of " +
                            to_string(g2.range));
    return GroupoidElement{g1.range, g1.word * g2.word, g2.source};
}

GroupoidElement g_inverse(const GroupoidElement& g) {
    return GroupoidElement{g.source, g.word.inverse(), g.range};
}

std::string to_string(const GroupoidElement& g) {
    return "(" + to_string(g.range.x) + "; " + to_string(g.range.y) + " <-" +
           to_string(g.word) + "- " + to_string(g.source.x) + "; " +
           to_string(g.source.y) + ")";
}

TwistElement iota(const BasePoint& p, const Angle& z) {
    return TwistElement{ClassRep{Word(), p, z}};
}

GroupoidElement pi(const TwistElement& e) {
    return GroupoidElement{alpha(e.word(), e.base()), e.word(), e.base()};
}

bool in_isotropy_interior(const Word& w) { return w.a_exponent() == 0; }

bool in_isotropy_interior(const GroupoidElement& g) {
    return in_isotropy_interior(g.word);
}

// ---------------------------------------------------------------------------
// Obstruction certificates

long word_obstruction(const Word& w, std::size_t samples) {
    const Angle probe_x(Rational(1, 16));
    std::vector<Angle> loop;
    loop.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        BasePoint p(probe_x, Rational(Int(k), Int(samples)));
        Angle acc;
        for (std::size_t i = 0; i < w.size(); ++i)
            acc = acc + transition(letter_bundle(w[i]), Chart::zero, Chart::one, p);
        loop.push_back(acc);
    }
    return winding_number(loop);
}

RestrictedTwist::RestrictedTwist(std::function<bool(const Word&)> filter,
                                 std::string name, std::size_t closure_search_len)
    : filter_(std::move(filter)), name_(std::move(name)) {
    if (!filter_(Word()))
        throw NotSubgroupoid("filter '" + name_ + "' rejects the empty word");
    std::vector<Word> pool;
    for (const Word& w : all_reduced_words(closure_search_len))
        if (filter_(w)) pool.push_back(w);
    for (const Word& w : pool) {
        if (!filter_(w.inverse()))
            throw NotSubgroupoid("filter '" + name_ + "' keeps " + to_string(w) +
                                 " but drops its inverse " +
                                 to_string(w.inverse()));
    }
    for (const Word& u : pool)
        for (const Word& v : pool) {
            Word uv = u * v;
            if (!filter_(uv))
                throw NotSubgroupoid("filter '" + name_ + "' keeps " +
                                     to_string(u) + " and " + to_string(v) +
                                     " but drops their product " + to_string(uv));
        }
}

std::vector<Word> RestrictedTwist::words_up_to(std::size_t max_len) const {
    std::vector<Word> out;
    for (const Word& w : all_reduced_words(max_len))
        if (filter_(w)) out.push_back(w);
    return out;
}

TwistElement RestrictedTwist::multiply(const TwistElement& e1,
                                       const TwistElement& e2) const {
    if (!contains(e1.word()) || !contains(e2.word()))
        throw NotSubgroupoid("operand outside the '" + name_ + "' restriction");
    return e1 * e2;
}

TwistElement RestrictedTwist::invert(const TwistElement& e) const {
    if (!contains(e.word()))
        throw NotSubgroupoid("operand outside the '" + name_ + "' restriction");
    return inverse(e);
}

long RestrictedTwist::obstruction_certificate(const Word& w,
                                              std::size_t samples) const {
    if (!contains(w))
        throw NotSubgroupoid("word " + to_string(w) + " outside the '" + name_ +
                             "' restriction");
    return word_obstruction(w, samples);
}

RestrictedTwist full_twist() {
    return RestrictedTwist([](const Word&) { return true; }, "full");
}

RestrictedTwist isotropy_restriction() {
    return RestrictedTwist([](const Word& w) { return in_isotropy_interior(w); },
                           "isotropy");
}

// ---------------------------------------------------------------------------
// Cocycles

TwoCocycle zero_cocycle() {
    return TwoCocycle{"zero", [](const GroupoidElement&, const GroupoidElement&) {
                          return Angle();
                      }};
}

TwoCocycle bilinear_cocycle(const Rational& weight) {
    Rational w = weight;
    return TwoCocycle{"bilinear*" + to_string(w),
                      [w](const GroupoidElement& g1, const GroupoidElement& g2) {
                          Rational v = Rational(g1.word.a_exponent()) *
                                       Rational(g2.word.b_exponent()) * w;
                          return Angle(v);
                      }};
}

std::optional<std::string> cocycle_identity_witness(const TwoCocycle& sigma,
                                                    std::uint64_t seed,
                                                    std::size_t trials) {
    for (std::size_t i = 0; i < trials; ++i) {
        Sampler rng(seed, i);
        Word w3 = rng.word(3), w2 = rng.word(3), w1 = rng.word(3);
        BasePoint y = rng.base_point();
        GroupoidElement g3 = g_element(w3, y);
        GroupoidElement g2 = g_element(w2, g3.range);
        GroupoidElement g1 = g_element(w1, g2.range);
        Angle lhs = sigma.eval(g1, g2) + sigma.eval(g_multiply(g1, g2), g3);
        Angle rhs = sigma.eval(g1, g_multiply(g2, g3)) + sigma.eval(g2, g3);
        if (!(lhs == rhs))
            return "cocycle identity fails on (" + to_string(g1) + ", " +
                   to_string(g2) + ", " + to_string(g3) + "): " + to_string(lhs) +
                   " vs " + to_string(rhs);
        if (!sigma.eval(g_unit(g1.range), g1).is_zero() ||
            !sigma.eval(g1, g_unit(g1.source)).is_zero())
            return "unit normalization fails at " + to_string(g1);
    }
    return std::nullopt;
}

CocycleElement CocycleTwist::multiply(const CocycleElement& e1,
                                      const CocycleElement& e2) const {
    GroupoidElement g = g_multiply(e1.g, e2.g);
    return CocycleElement{g, sigma_.eval(e1.g, e2.g) + e1.t + e2.t};
}

CocycleElement CocycleTwist::invert(const CocycleElement& e) const {
    GroupoidElement gi = g_inverse(e.g);
    return CocycleElement{gi, -(sigma_.eval(e.g, gi) + e.t)};
}

CocycleElement CocycleTwist::iota(const BasePoint& p, const Angle& z) const {
    return CocycleElement{g_unit(p), z};
}

CocycleElement CocycleTwist::range_of(const CocycleElement& e) const {
    return CocycleElement{g_unit(e.g.range), Angle()};
}

CocycleElement CocycleTwist::source_of(const CocycleElement& e) const {
    return CocycleElement{g_unit(e.g.source), Angle()};
}

long CocycleTwist::obstruction_certificate(const Word&, std::size_t samples) const {
    // Product space: the section g -> (g, 0) is global, its chart
    // comparisons vanish identically. Wind them anyway.
    std::vector<Angle> loop(samples, Angle());
    return winding_number(loop);
}

CocycleTwist build_cocycle_twist(const TwoCocycle& sigma, std::uint64_t seed,
                                 std::size_t trials) {
    if (auto witness = cocycle_identity_witness(sigma, seed, trials))
        throw CocycleIdentityViolated(*witness);
    return CocycleTwist(sigma);
}

std::string to_string(const CocycleElement& e) {
    return "<" + to_string(e.g) + " | " + to_string(e.t) + ">";
}

TwoCocycle cocycle_from_section(const RestrictedTwist& tw, const TwistSection& S,
                                std::uint64_t seed, std::size_t trials,
                                std::size_t word_len) {
    std::vector<Word> pool = tw.words_up_to(word_len);
    for (std::size_t i = 0; i < trials; ++i) {
        Sampler rng(seed, i);
        Word w = pool[rng.below(pool.size())];
        GroupoidElement g = g_element(w, rng.base_point());
        if (!(pi(S(g)) == g))
            throw NotASection("candidate section misses " + to_string(g));
    }
    return TwoCocycle{"section over " + tw.name(),
                      [S](const GroupoidElement& g1, const GroupoidElement& g2) {
                          TwistElement e =
                              S(g1) * S(g2) * inverse(S(g_multiply(g1, g2)));
                          assert(e.word().empty());
                          return e.phase();
                      }};
}

TwoCocycle cocycle_from_section(const CocycleTwist& tw, const CocycleSection& S,
                                std::uint64_t seed, std::size_t trials,
                                std::size_t word_len) {
    for (std::size_t i = 0; i < trials; ++i) {
        Sampler rng(seed, i);
        GroupoidElement g = g_element(rng.word(word_len), rng.base_point());
        if (!(tw.pi(S(g)) == g))
            throw NotASection("candidate section misses " + to_string(g));
    }
    return TwoCocycle{"section over cocycle twist",
                      [tw, S](const GroupoidElement& g1, const GroupoidElement& g2) {
                          CocycleElement e = tw.multiply(
                              tw.multiply(S(g1), S(g2)),
                              tw.invert(S(g_multiply(g1, g2))));
                          assert(e.g.word.empty());
                          return e.t;
                      }};
}

// ---------------------------------------------------------------------------
// Orbit gaps

static OrbitReport gaps_from_sorted(std::vector<unsigned __int128>& vals,
                                    std::size_t n) {
    std::sort(vals.begin(), vals.end());
    const unsigned __int128 one = static_cast<unsigned __int128>(1) << 120;
    unsigned __int128 max_gap = 0;
    for (std::size_t i = 0; i + 1 < vals.size(); ++i)
        max_gap = std::max(max_gap, vals[i + 1] - vals[i]);
    if (!vals.empty())
        max_gap = std::max(max_gap, vals.front() + one - vals.back());
    OrbitReport r;
    r.iterations = n;
    r.max_gap = static_cast<double>(max_gap) / static_cast<double>(one);
    r.bound = 10.0 / static_cast<double>(n);
    r.pass = r.max_gap < r.bound;
    return r;
}

OrbitReport orbit_report(std::size_t n, const Angle& rotation) {
    std::vector<unsigned __int128> vals(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long k = 0; k < static_cast<long long>(n); ++k)
        vals[static_cast<std::size_t>(k)] =
            angle_to_float(scale(Int(k), rotation), 128).to_fixed120();
    return gaps_from_sorted(vals, n);
}

OrbitReport orbit_report_serial(std::size_t n, const Angle& rotation) {
    std::vector<unsigned __int128> vals(n);
    BigFloat acc(192);
    BigFloat step = angle_to_float(rotation, 192);
    for (std::size_t k = 0; k < n; ++k) {
        vals[k] = acc.to_fixed120();
        acc = (acc + step).fractional();
    }
    return gaps_from_sorted(vals, n);
}

// ---------------------------------------------------------------------------
// Draws

FiberPoint draw_letter_point(Sampler& rng, Letter d) {
    return FiberPoint{letter_bundle(d), rng.base_point(), rng.angle()};
}

ClassRep draw_class(Sampler& rng, const Word& w) {
    return ClassRep{w, rng.base_point(), rng.angle()};
}

TupleElement draw_tuple(Sampler& rng, const Word& w) {
    TupleElement t = canonical_tuple(draw_class(rng, w));
    if (t.entries.size() < 2) return t;
    std::vector<Angle> zs(t.entries.size());
    Angle sum;
    for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
        zs[i] = rng.angle();
        sum = sum + zs[i];
    }
    zs.back() = -sum;
    return gauge_act(t, zs);
}

std::pair<TwistElement, TwistElement> draw_composable(Sampler& rng, const Word& w1,
                                                      const Word& w2) {
    BasePoint y = rng.base_point();
    ClassRep right{w2, y, rng.angle()};
    ClassRep left{w1, alpha(w2, y), rng.angle()};
    return {TwistElement{left}, TwistElement{right}};
}

GroupoidElement draw_arrow(Sampler& rng, std::size_t word_len) {
    return g_element(rng.word(word_len), rng.base_point());
}

std::pair<GroupoidElement, GroupoidElement> draw_g_pair(Sampler& rng,
                                                        std::size_t word_len) {
    GroupoidElement g2 = g_element(rng.word(word_len), rng.base_point());
    GroupoidElement g1 = g_element(rng.word(word_len), g2.range);
    return {g1, g2};
}

} // namespace twistlab
