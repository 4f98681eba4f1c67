#include "twistlab/expr.hpp"
#include "twistlab/verify.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int run_eval(const std::string& text) {
    twistlab::TwistElement result = twistlab::eval_string(text);
    std::cout << twistlab::to_string(result) << "\n";
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, std::size_t samples,
               const std::string& json_path) {
    twistlab::Report rep = twistlab::run_suite(suite, seed, samples);
    std::cout << "suite: " << rep.suite << "\n";
    std::cout << "seed: " << rep.seed << "\n";
    std::cout << "samples: " << rep.samples << "\n";
    for (const auto& [word, cert] : rep.certificates)
        std::cout << "certificate " << word << " = " << cert << "\n";
    if (rep.max_gap)
        std::cout << "max gap: " << *rep.max_gap << "\n";
    for (const twistlab::Failure& f : rep.failures) {
        std::cout << "FAIL " << f.case_name << "\n";
        std::cout << "  witness: " << f.witness << "\n";
        std::cout << "  expected: " << f.expected << "\n";
        std::cout << "  got: " << f.got << "\n";
    }
    std::cout << "failures: " << rep.failures.size() << "\n";
    std::cout << "result: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return 2;
        }
        out << rep.to_json() << "\n";
    }
    return rep.pass() ? 0 : 1;
}

int run_certify(const std::string& word_text, std::size_t samples) {
    auto word = twistlab::Word::parse(word_text);
    if (!word) {
        std::cerr << "error: '" << word_text
                  << "' is not a word over a, A, b, B or e\n";
        return 2;
    }
    long cert = twistlab::full_twist().obstruction_certificate(*word, samples);
    long closed = twistlab::chern_number(*word);
    std::cout << "word: " << twistlab::to_string(*word) << "\n";
    std::cout << "certificate: " << cert << "\n";
    std::cout << "closed form: " << closed << "\n";
    if (cert != closed) {
        std::cout << "result: FAIL\n";
        return 1;
    }
    std::cout << "result: PASS\n";
    return 0;
}

int run_orbit(std::size_t iterations) {
    twistlab::OrbitReport rep = twistlab::orbit_report(iterations);
    std::cout << "iterations: " << rep.iterations << "\n";
    std::cout << "max gap: " << rep.max_gap << "\n";
    std::cout << "bound: " << rep.bound << "\n";
    std::cout << "result: " << (rep.pass ? "PASS" : "FAIL") << "\n";
    return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for the twisted free-group torus groupoid"};
    app.require_subcommand(1);

    std::string expr_text;
    CLI::App* eval_cmd =
        app.add_subcommand("eval", "evaluate an element expression");
    eval_cmd->add_option("expr", expr_text, "expression over element literals")
        ->required();

    std::string suite;
    std::uint64_t seed = 1;
    std::size_t samples = 0;
    std::string json_path;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "suite name, or 'all'")->required();
    verify_cmd->add_option("--seed", seed, "base seed for the trial sampler");
    verify_cmd->add_option("--samples", samples,
                           "trial count (0 picks the suite default)");
    verify_cmd->add_option("--json", json_path, "write the JSON report here");

    std::string word_text;
    std::size_t winding_samples = 1024;
    CLI::App* certify_cmd = app.add_subcommand(
        "certify", "compute the obstruction certificate of a word");
    certify_cmd->add_option("--word", word_text, "reduced word")->required();
    certify_cmd->add_option("--samples", winding_samples,
                            "seam samples for the winding");

    std::size_t iterations = 100000;
    CLI::App* orbit_cmd = app.add_subcommand(
        "orbit", "measure the largest rotation-orbit gap");
    orbit_cmd->add_option("--iterations", iterations, "orbit length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval_cmd) return run_eval(expr_text);
        if (*verify_cmd) return run_verify(suite, seed, samples, json_path);
        if (*certify_cmd) return run_certify(word_text, winding_samples);
        if (*orbit_cmd) return run_orbit(iterations);
    } catch (const twistlab::SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const twistlab::UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
