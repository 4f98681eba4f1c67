#include "twistlab/verify.hpp"

#include "doctest.h"
#include "json.hpp"

#include <stdexcept>
#include <string>

using namespace twistlab;

namespace {

// Product with a phase skew on non-unit right factors; breaks centrality
// but nothing else, so the check must single it out.
TwistElement skewed_multiply(const TwistElement& e1, const TwistElement& e2) {
    TwistElement prod = e1 * e2;
    if (!e2.word().empty()) prod = act(Angle(Rational(1, 2)), prod);
    return prod;
}

} // namespace

TEST_CASE("parallel and serial runners agree") {
    Trial trial = [](std::size_t i) -> std::optional<Failure> {
        if (i % 11 == 5) throw std::runtime_error("boom " + std::to_string(i));
        if (i % 7 == 3)
            return Failure{"inject", "w" + std::to_string(i), "x", "y"};
        return std::nullopt;
    };
    std::vector<Failure> par = run_trials(100, trial);
    std::vector<Failure> ser = run_trials_serial(100, trial);
    REQUIRE(par.size() == ser.size());
    CHECK(par.size() == 22);
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].case_name == ser[i].case_name);
        CHECK(par[i].witness == ser[i].witness);
        CHECK(par[i].expected == ser[i].expected);
        CHECK(par[i].got == ser[i].got);
    }
    CHECK(par[0].case_name == "inject");
    CHECK(par[0].witness == "trial 3: w3");
    bool saw_exception = false;
    for (const Failure& f : par)
        if (f.case_name == "trial-exception" &&
            f.witness.find("boom") != std::string::npos)
            saw_exception = true;
    CHECK(saw_exception);

    CHECK(run_trials(50, [](std::size_t) { return std::nullopt; }).empty());
}

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    CHECK(names.size() == 8);
    CHECK(names.front() == "axioms");
    CHECK(names.back() == "all");

    CHECK(default_samples("obstruction") == 1024);
    CHECK(default_samples("minimality") == 100000);
    CHECK(default_samples("axioms") == 10000);
    CHECK(default_samples("twist") == 10000);

    CHECK_THROWS_AS(run_suite("nosuchsuite", 1, 10), UnknownSuite);
    try {
        run_suite("nosuchsuite", 1, 10);
    } catch (const UnknownSuite& e) {
        std::string msg = e.what();
        CHECK(msg.find("unknown suite 'nosuchsuite'") != std::string::npos);
        CHECK(msg.find("axioms") != std::string::npos);
    }
}

TEST_CASE("every suite passes at reduced sample counts") {
    for (const char* suite : {"axioms", "twist", "isotropy", "cocycle"}) {
        Report rep = run_suite(suite, 3, 300);
        CAPTURE(suite);
        CAPTURE(rep.to_json());
        CHECK(rep.pass());
        CHECK(rep.suite == suite);
        CHECK(rep.seed == 3);
        CHECK(rep.samples == 300);
        CHECK_FALSE(rep.max_gap.has_value());
    }

    Report obs = run_suite("obstruction", 3, 0);
    CHECK(obs.pass());
    CHECK(obs.samples == 1024);
    CHECK(obs.certificates.at("e") == 0);
    CHECK(obs.certificates.at("b") == 1);
    CHECK(obs.certificates.at("B") == -1);
    CHECK(obs.certificates.at("bb") == 2);
    CHECK(obs.certificates.at("ab") == 1);
    CHECK(obs.certificates.size() == 17);

    Report kum = run_suite("kumjian", 3, 200);
    CAPTURE(kum.to_json());
    CHECK(kum.pass());
    CHECK(kum.certificates.at("kumjian_full") == 1);
    CHECK(kum.certificates.at("kumjian_iso") == 0);

    Report coc = run_suite("cocycle", 3, 300);
    CAPTURE(coc.to_json());
    CHECK(coc.pass());
    CHECK(coc.certificates.at("cocycle_zero") == 0);
    CHECK(coc.certificates.at("cocycle_bilinear") == 0);

    Report mini = run_suite("minimality", 3, 2000);
    CHECK(mini.pass());
    REQUIRE(mini.max_gap.has_value());
    CHECK(*mini.max_gap < 10.0 / 2000.0);
}

TEST_CASE("the all suite merges its parts") {
    Report rep = run_suite("all", 3, 200);
    CAPTURE(rep.to_json());
    CHECK(rep.pass());
    CHECK(rep.suite == "all");
    CHECK(rep.certificates.count("bb") == 1);
    CHECK(rep.certificates.count("kumjian_full") == 1);
    CHECK(rep.certificates.count("cocycle_zero") == 1);
    REQUIRE(rep.max_gap.has_value());
}

TEST_CASE("reports serialize stably") {
    Report a = run_suite("obstruction", 5, 256);
    Report b = run_suite("obstruction", 5, 256);
    a.elapsed_ms = 0;
    b.elapsed_ms = 0;
    CHECK(a.to_json() == b.to_json());

    std::string text = a.to_json();
    auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["suite"] == "obstruction");
    CHECK(parsed["seed"] == 5);
    CHECK(parsed["samples"] == 256);
    CHECK(parsed["failures"].is_array());
    CHECK(parsed["certificates"].is_object());
    CHECK(parsed["max_gap"].is_null());
    CHECK(parsed["elapsed_ms"] == 0);

    CHECK(text.find("\"suite\"") < text.find("\"seed\""));
    CHECK(text.find("\"seed\"") < text.find("\"samples\""));
    CHECK(text.find("\"samples\"") < text.find("\"failures\""));
    CHECK(text.find("\"failures\"") < text.find("\"certificates\""));
    CHECK(text.find("\"certificates\"") < text.find("\"max_gap\""));
    CHECK(text.find("\"max_gap\"") < text.find("\"elapsed_ms\""));

    Report mini = run_suite("minimality", 1, 1000);
    auto mj = nlohmann::json::parse(mini.to_json());
    CHECK(mj["max_gap"].is_number());

    Report failing;
    failing.suite = "demo";
    failing.failures.push_back(Failure{"case-a", "w", "1", "2"});
    CHECK_FALSE(failing.pass());
    auto fj = nlohmann::json::parse(failing.to_json());
    CHECK(fj["failures"][0]["case"] == "case-a");
    CHECK(fj["failures"][0]["witness"] == "w");
    CHECK(fj["failures"][0]["expected"] == "1");
    CHECK(fj["failures"][0]["got"] == "2");
}

TEST_CASE("orbit runners agree and catch rational rotations") {
    OrbitReport par = orbit_report(5000);
    OrbitReport ser = orbit_report_serial(5000);
    CHECK(par.iterations == 5000);
    CHECK(par.max_gap == ser.max_gap);
    CHECK(par.pass);
    CHECK(ser.pass);
    CHECK(par.bound == 10.0 / 5000.0);

    OrbitReport small = orbit_report(1000);
    CHECK(small.max_gap < 0.01);
    CHECK(small.pass);

    double prev = orbit_report(377).max_gap;
    for (std::size_t n : {987u, 2584u}) {
        double gap = orbit_report(n).max_gap;
        CHECK(gap < prev);
        prev = gap;
    }

    OrbitReport tenth = orbit_report(1000, Angle(Rational(1, 10)));
    CHECK_FALSE(tenth.pass);
    CHECK(tenth.max_gap >= 0.09);
    OrbitReport third = orbit_report_serial(1000, Angle(Rational(1, 3)));
    CHECK_FALSE(third.pass);
}

TEST_CASE("a skewed product is caught by the centrality trial") {
    auto centrality_failures = [](auto&& multiply) {
        return run_trials(50, [&multiply](std::size_t i) -> std::optional<Failure> {
            Sampler rng(7, i);
            Word w = rng.word(3);
            ClassRep c = draw_class(rng, w);
            TwistElement e{c};
            Angle z = rng.angle();
            TwistElement lhs = multiply(iota(alpha(w, c.base), z), e);
            TwistElement rhs = multiply(e, iota(c.base, z));
            if (!(lhs == rhs))
                return Failure{"skewed-centrality", to_string(e), to_string(rhs),
                               to_string(lhs)};
            return std::nullopt;
        });
    };

    CHECK(centrality_failures(
              [](const TwistElement& a, const TwistElement& b) { return a * b; })
              .empty());

    std::vector<Failure> caught = centrality_failures(skewed_multiply);
    CHECK_FALSE(caught.empty());
    CHECK(caught.front().case_name == "skewed-centrality");
}
