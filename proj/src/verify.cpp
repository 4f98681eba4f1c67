#include "twistlab/verify.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>

namespace twistlab {

namespace {

Failure make_failure(std::string case_name, std::string witness,
                     std::string expected, std::string got) {
    return Failure{std::move(case_name), std::move(witness), std::move(expected),
                   std::move(got)};
}

TupleElement gauge_scramble(Sampler& rng, const TupleElement& t) {
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

std::vector<Failure> axioms_trials(std::uint64_t seed, std::size_t n) {
    return run_trials(n, [seed](std::size_t i) -> std::optional<Failure> {
        Sampler rng(seed, i);
        Word w1 = rng.word(4), w2 = rng.word(4), w3 = rng.word(4);
        BasePoint y = rng.base_point();
        ClassRep c3{w3, y, rng.angle()};
        ClassRep c2{w2, alpha(w3, y), rng.angle()};
        ClassRep c1{w1, alpha(w2, alpha(w3, y)), rng.angle()};
        TwistElement e1{c1}, e2{c2}, e3{c3};

        TwistElement assoc_l = (e1 * e2) * e3;
        TwistElement assoc_r = e1 * (e2 * e3);
        if (!(assoc_l == assoc_r))
            return make_failure("associativity",
                                to_string(e1) + " " + to_string(e2) + " " +
                                    to_string(e3),
                                to_string(assoc_r), to_string(assoc_l));
        if (!(range_of(e1) * e1 == e1))
            return make_failure("left-unit", to_string(e1), to_string(e1),
                                to_string(range_of(e1) * e1));
        if (!(e1 * source_of(e1) == e1))
            return make_failure("right-unit", to_string(e1), to_string(e1),
                                to_string(e1 * source_of(e1)));
        if (!(e1 * inverse(e1) == range_of(e1)))
            return make_failure("right-inverse", to_string(e1),
                                to_string(range_of(e1)),
                                to_string(e1 * inverse(e1)));
        if (!(inverse(e1) * e1 == source_of(e1)))
            return make_failure("left-inverse", to_string(e1),
                                to_string(source_of(e1)),
                                to_string(inverse(e1) * e1));
        if (!(inverse(inverse(e1)) == e1))
            return make_failure("double-inverse", to_string(e1), to_string(e1),
                                to_string(inverse(inverse(e1))));

        // The cancellation recursion against its closed form: reduced
        // word, source base, plain sum of the stored phases.
        TupleElement t1 = gauge_scramble(rng, canonical_tuple(c1));
        TupleElement t2 = gauge_scramble(rng, canonical_tuple(c2));
        ClassRep got = reduce_product(t1, t2);
        ClassRep want{w1 * w2, c2.base, c1.phase + c2.phase};
        if (!(got == want))
            return make_failure("product-phase-sum",
                                to_string(c1) + " " + to_string(c2),
                                to_string(want), to_string(got));

        Angle z1 = rng.angle(), z2 = rng.angle();
        FiberPoint p1 = draw_letter_point(rng, Letter::b);
        FiberPoint p2{p1.bundle, p1.base, rng.angle()};
        Angle bilin = pairing(act(z1, p1), act(z2, p2));
        Angle plain = z1 - z2 + pairing(p1, p2);
        if (!(bilin == plain))
            return make_failure("pairing-bilinear",
                                to_string(p1) + " " + to_string(p2),
                                to_string(plain), to_string(bilin));

        Angle irr(rng.rational(), Int(1) + Int(rng.below(3)));
        if (compare_value_to(irr, rng.rational()) == 0)
            return make_failure("irrational-angle", to_string(irr),
                                "nonzero comparison", "0");
        return std::nullopt;
    });
}

std::vector<Failure> twist_trials(std::uint64_t seed, std::size_t n) {
    return run_trials(n, [seed](std::size_t i) -> std::optional<Failure> {
        Sampler rng(seed, i);
        auto [e1, e2] = draw_composable(rng, rng.word(4), rng.word(4));
        Angle z = rng.angle();

        TwistElement cen_l = iota(alpha(e1.word(), e1.base()), z) * e1;
        TwistElement cen_r = e1 * iota(e1.base(), z);
        if (!(cen_l == cen_r))
            return make_failure("centrality", to_string(e1), to_string(cen_r),
                                to_string(cen_l));
        if (!(pi(e1 * e2) == g_multiply(pi(e1), pi(e2))))
            return make_failure("projection-product",
                                to_string(e1) + " " + to_string(e2),
                                to_string(g_multiply(pi(e1), pi(e2))),
                                to_string(pi(e1 * e2)));
        if (!(pi(inverse(e1)) == g_inverse(pi(e1))))
            return make_failure("projection-inverse", to_string(e1),
                                to_string(g_inverse(pi(e1))),
                                to_string(pi(inverse(e1))));

        BasePoint p = rng.base_point();
        Angle z2 = rng.angle();
        if (!(pi(iota(p, z)) == g_unit(p)))
            return make_failure("inclusion-projects-to-unit", to_string(iota(p, z)),
                                to_string(g_unit(p)), to_string(pi(iota(p, z))));
        if (!(iota(p, z) * iota(p, z2) == iota(p, z + z2)))
            return make_failure("inclusion-multiplicative",
                                to_string(z) + ", " + to_string(z2),
                                to_string(iota(p, z + z2)),
                                to_string(iota(p, z) * iota(p, z2)));

        TwistElement u = e1 * inverse(e1);
        if (!u.word().empty() || !(u == iota(u.base(), u.phase())))
            return make_failure("kernel-is-inclusion-image", to_string(u),
                                "an inclusion image over a unit", to_string(u));
        return std::nullopt;
    });
}

std::vector<Failure> isotropy_trials(std::uint64_t seed, std::size_t n) {
    return run_trials(n, [seed](std::size_t i) -> std::optional<Failure> {
        Sampler rng(seed, i);
        Word w = rng.word(6);
        GroupoidElement g = g_element(w, rng.base_point());
        bool closed = g.range == g.source;
        bool kernel = w.a_exponent() == 0;
        if (closed != kernel)
            return make_failure("isotropy-grading", to_string(g),
                                kernel ? "r = s" : "r != s",
                                closed ? "r = s" : "r != s");
        if (in_isotropy_interior(g) != kernel)
            return make_failure("isotropy-membership", to_string(g),
                                kernel ? "member" : "non-member",
                                in_isotropy_interior(g) ? "member" : "non-member");
        return std::nullopt;
    });
}

void obstruction_suite(Report& rep, std::uint64_t seed, std::size_t n) {
    for (const Word& w : all_reduced_words(2)) {
        long cert = word_obstruction(w, n);
        rep.certificates[to_string(w)] = cert;
        if (cert != chern_number(w))
            rep.failures.push_back(make_failure(
                "certificate-closed-form", to_string(w),
                std::to_string(chern_number(w)), std::to_string(cert)));
    }

    RestrictedTwist iso = isotropy_restriction();
    Word b = *Word::parse("b");
    long cb = iso.obstruction_certificate(b, n);
    if (cb != 1)
        rep.failures.push_back(
            make_failure("isotropy-restriction-b", to_string(b), "1",
                         std::to_string(cb)));

    auto additivity = run_trials(32, [seed, n](std::size_t i) -> std::optional<Failure> {
        Sampler rng(seed, i);
        Word w1 = rng.word(2), w2 = rng.word(2);
        long sum = word_obstruction(w1, n) + word_obstruction(w2, n);
        long whole = word_obstruction(w1 * w2, n);
        if (whole != sum)
            return make_failure("certificate-additivity",
                                to_string(w1) + ", " + to_string(w2),
                                std::to_string(sum), std::to_string(whole));
        return std::nullopt;
    });
    rep.failures.insert(rep.failures.end(), additivity.begin(), additivity.end());
}

KTwistElement k_make(Sampler& rng, const BasePoint& p, int r, int s) {
    if (r == s) return k_unit(p, r, rng.angle());
    if (r == 0) return k_b_arrow(FiberPoint{ClutchBundle{1}, p, rng.angle()});
    return k_conj_arrow(FiberPoint{ClutchBundle{-1}, p, rng.angle()});
}

void kumjian_suite(Report& rep, std::uint64_t seed, std::size_t n) {
    KContrastReport kc = k_effectiveness_check(seed, n, 1024);
    rep.certificates["kumjian_full"] = kc.full_certificate;
    rep.certificates["kumjian_iso"] = kc.iso_certificate;
    if (!kc.isotropy_is_units)
        rep.failures.push_back(make_failure("isotropy-is-units", "tag table",
                                            "only unit tags isotropic",
                                            "non-unit isotropy"));
    if (!kc.section_multiplicative)
        rep.failures.push_back(make_failure("iso-zero-section",
                                            std::to_string(kc.section_checks) +
                                                " checks",
                                            "multiplicative", "violation"));
    if (kc.iso_certificate != 0)
        rep.failures.push_back(make_failure("iso-certificate", "unit component",
                                            "0",
                                            std::to_string(kc.iso_certificate)));
    if (kc.full_certificate != 1)
        rep.failures.push_back(make_failure("full-certificate", "(0,1) component",
                                            "1",
                                            std::to_string(kc.full_certificate)));

    auto trials = run_trials(n, [seed](std::size_t i) -> std::optional<Failure> {
        Sampler rng(seed, i);
        BasePoint p = rng.base_point();
        int t0 = static_cast<int>(rng.below(2));
        int t1 = static_cast<int>(rng.below(2));
        int t2 = static_cast<int>(rng.below(2));
        int t3 = static_cast<int>(rng.below(2));
        KTwistElement e1 = k_make(rng, p, t0, t1);
        KTwistElement e2 = k_make(rng, p, t1, t2);
        KTwistElement e3 = k_make(rng, p, t2, t3);

        KTwistElement assoc_l = k_multiply(k_multiply(e1, e2), e3);
        KTwistElement assoc_r = k_multiply(e1, k_multiply(e2, e3));
        if (!(assoc_l == assoc_r))
            return make_failure("k-associativity",
                                to_string(e1) + " " + to_string(e2) + " " +
                                    to_string(e3),
                                to_string(assoc_r), to_string(assoc_l));
        if (!(k_multiply(e1, k_invert(e1)) == k_range(e1)))
            return make_failure("k-right-inverse", to_string(e1),
                                to_string(k_range(e1)),
                                to_string(k_multiply(e1, k_invert(e1))));
        if (!(k_multiply(k_invert(e1), e1) == k_source(e1)))
            return make_failure("k-left-inverse", to_string(e1),
                                to_string(k_source(e1)),
                                to_string(k_multiply(k_invert(e1), e1)));
        if (!(k_invert(k_invert(e1)) == e1))
            return make_failure("k-double-inverse", to_string(e1), to_string(e1),
                                to_string(k_invert(k_invert(e1))));

        Angle z = rng.angle();
        KTwistElement cen_l = k_multiply(k_iota(p, t0, z), e1);
        KTwistElement cen_r = k_multiply(e1, k_iota(p, t1, z));
        if (!(cen_l == cen_r))
            return make_failure("k-centrality", to_string(e1), to_string(cen_r),
                                to_string(cen_l));
        if (!(k_pi(k_multiply(e1, e2)) == k_g_multiply(k_pi(e1), k_pi(e2))))
            return make_failure("k-projection-product",
                                to_string(e1) + " " + to_string(e2),
                                to_string(k_g_multiply(k_pi(e1), k_pi(e2))),
                                to_string(k_pi(k_multiply(e1, e2))));
        return std::nullopt;
    });
    rep.failures.insert(rep.failures.end(), trials.begin(), trials.end());
}

void cocycle_suite(Report& rep, std::uint64_t seed, std::size_t n) {
    struct Entry {
        std::string label;
        TwoCocycle sigma;
    };
    std::vector<Entry> entries;
    entries.push_back({"zero", zero_cocycle()});
    entries.push_back({"bilinear", bilinear_cocycle(Rational(1, 2))});

    for (const Entry& entry : entries) {
        if (auto witness = cocycle_identity_witness(entry.sigma, seed, n))
            rep.failures.push_back(make_failure(entry.label + "-identity",
                                                *witness, "identity holds",
                                                "violation"));
        CocycleTwist tw(entry.sigma);
        rep.certificates["cocycle_" + entry.label] =
            tw.obstruction_certificate(Word(), 1024);

        const TwoCocycle& sigma = entry.sigma;
        auto trials = run_trials(n, [seed, &tw, &sigma,
                                     &entry](std::size_t i) -> std::optional<Failure> {
            Sampler rng(seed, i);
            Word w3 = rng.word(3), w2 = rng.word(3), w1 = rng.word(3);
            BasePoint y = rng.base_point();
            GroupoidElement g3 = g_element(w3, y);
            GroupoidElement g2 = g_element(w2, g3.range);
            GroupoidElement g1 = g_element(w1, g2.range);
            CocycleElement e1{g1, rng.angle()};
            CocycleElement e2{g2, rng.angle()};
            CocycleElement e3{g3, rng.angle()};

            CocycleElement assoc_l = tw.multiply(tw.multiply(e1, e2), e3);
            CocycleElement assoc_r = tw.multiply(e1, tw.multiply(e2, e3));
            if (!(assoc_l == assoc_r))
                return make_failure(entry.label + "-associativity",
                                    to_string(e1) + " " + to_string(e2) + " " +
                                        to_string(e3),
                                    to_string(assoc_r), to_string(assoc_l));
            if (!(tw.multiply(e1, tw.invert(e1)) == tw.range_of(e1)))
                return make_failure(entry.label + "-right-inverse", to_string(e1),
                                    to_string(tw.range_of(e1)),
                                    to_string(tw.multiply(e1, tw.invert(e1))));
            if (!(tw.multiply(tw.invert(e1), e1) == tw.source_of(e1)))
                return make_failure(entry.label + "-left-inverse", to_string(e1),
                                    to_string(tw.source_of(e1)),
                                    to_string(tw.multiply(tw.invert(e1), e1)));

            Angle z = rng.angle();
            CocycleElement cen_l = tw.multiply(tw.iota(g1.range, z), e1);
            CocycleElement cen_r = tw.multiply(e1, tw.iota(g1.source, z));
            if (!(cen_l == cen_r))
                return make_failure(entry.label + "-centrality", to_string(e1),
                                    to_string(cen_r), to_string(cen_l));

            Angle want = sigma.eval(g1, g2);
            CocycleElement s12 = tw.multiply(
                tw.multiply(tw.canonical_section(g1), tw.canonical_section(g2)),
                tw.invert(tw.canonical_section(g_multiply(g1, g2))));
            if (!(s12.t == want))
                return make_failure(entry.label + "-section-recovery",
                                    to_string(g1) + " " + to_string(g2),
                                    to_string(want), to_string(s12.t));
            return std::nullopt;
        });
        rep.failures.insert(rep.failures.end(), trials.begin(), trials.end());
    }
}

void minimality_suite(Report& rep, std::size_t n) {
    OrbitReport orbit = orbit_report(n);
    rep.max_gap = orbit.max_gap;
    if (!orbit.pass)
        rep.failures.push_back(make_failure(
            "orbit-gap", std::to_string(n) + " iterates",
            "max gap < " + std::to_string(orbit.bound),
            std::to_string(orbit.max_gap)));
}

Report run_one(const std::string& name, std::uint64_t seed, std::size_t samples) {
    Report rep;
    rep.suite = name;
    rep.seed = seed;
    rep.samples = samples;
    if (name == "axioms")
        rep.failures = axioms_trials(seed, samples);
    else if (name == "twist")
        rep.failures = twist_trials(seed, samples);
    else if (name == "isotropy")
        rep.failures = isotropy_trials(seed, samples);
    else if (name == "obstruction")
        obstruction_suite(rep, seed, samples);
    else if (name == "kumjian")
        kumjian_suite(rep, seed, samples);
    else if (name == "cocycle")
        cocycle_suite(rep, seed, samples);
    else if (name == "minimality")
        minimality_suite(rep, samples);
    return rep;
}

} // namespace

std::vector<Failure> run_trials(std::size_t n, const Trial& trial) {
    std::vector<std::optional<Failure>> slots(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        std::size_t k = static_cast<std::size_t>(i);
        try {
            slots[k] = trial(k);
        } catch (const std::exception& e) {
            slots[k] = Failure{"trial-exception", e.what(), "no exception",
                               "exception"};
        }
    }
    std::vector<Failure> failures;
    for (std::size_t i = 0; i < n; ++i)
        if (slots[i]) {
            Failure f = *slots[i];
            f.witness = "trial " + std::to_string(i) + ": " + f.witness;
            failures.push_back(std::move(f));
        }
    return failures;
}

std::vector<Failure> run_trials_serial(std::size_t n, const Trial& trial) {
    std::vector<Failure> failures;
    for (std::size_t i = 0; i < n; ++i) {
        std::optional<Failure> f;
        try {
            f = trial(i);
        } catch (const std::exception& e) {
            f = Failure{"trial-exception", e.what(), "no exception", "exception"};
        }
        if (f) {
            f->witness = "trial " + std::to_string(i) + ": " + f->witness;
            failures.push_back(std::move(*f));
        }
    }
    return failures;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "axioms", "twist",   "isotropy",   "obstruction",
        "kumjian", "cocycle", "minimality", "all"};
    return names;
}

std::size_t default_samples(const std::string& suite) {
    if (suite == "obstruction") return 1024;
    if (suite == "minimality") return 100000;
    return 10000;
}

Report run_suite(const std::string& name, std::uint64_t seed, std::size_t samples) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::string known;
        for (const std::string& s : names) known += (known.empty() ? "" : ", ") + s;
        throw UnknownSuite("unknown suite '" + name + "', expected one of: " +
                           known);
    }

    auto start = std::chrono::steady_clock::now();
    Report rep;
    if (name == "all") {
        rep.suite = name;
        rep.seed = seed;
        rep.samples = samples;
        for (const std::string& sub : names) {
            if (sub == "all") continue;
            std::size_t count = samples ? samples : default_samples(sub);
            Report part = run_one(sub, seed, count);
            for (Failure& f : part.failures) {
                f.case_name = sub + ":" + f.case_name;
                rep.failures.push_back(std::move(f));
            }
            rep.certificates.insert(part.certificates.begin(),
                                    part.certificates.end());
            if (part.max_gap) rep.max_gap = part.max_gap;
        }
    } else {
        try {
            rep = run_one(name, seed, samples ? samples : default_samples(name));
        } catch (const std::exception& e) {
            rep.suite = name;
            rep.seed = seed;
            rep.samples = samples;
            rep.failures.push_back(Failure{"suite-exception", e.what(),
                                           "no exception", "exception"});
        }
    }
    auto stop = std::chrono::steady_clock::now();
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return rep;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["samples"] = samples;
    j["failures"] = nlohmann::ordered_json::array();
    for (const Failure& f : failures) {
        nlohmann::ordered_json jf;
        jf["case"] = f.case_name;
        jf["witness"] = f.witness;
        jf["expected"] = f.expected;
        jf["got"] = f.got;
        j["failures"].push_back(std::move(jf));
    }
    j["certificates"] = nlohmann::ordered_json::object();
    for (const auto& [word, cert] : certificates) j["certificates"][word] = cert;
    if (max_gap)
        j["max_gap"] = *max_gap;
    else
        j["max_gap"] = nullptr;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2);
}

} // namespace twistlab
