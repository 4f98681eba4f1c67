#include "twistlab/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_ms(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-24s %12.1f %12.1f %10.2fx\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

} // namespace

int main() {
    using namespace twistlab;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif
    std::printf("%-24s %12s %12s %10s\n", "kernel", "serial ms", "parallel ms",
                "speedup");

    const std::uint64_t seed = 7;
    const std::size_t trials = 4000;
    Trial trial = [seed](std::size_t i) -> std::optional<Failure> {
        Sampler rng(seed, i);
        auto [e1, e2] = draw_composable(rng, rng.word(4), rng.word(4));
        TwistElement prod = e1 * e2;
        TwistElement back = prod * inverse(e2);
        if (!(back == e1))
            return Failure{"cancellation", to_string(e1), to_string(e1),
                           to_string(back)};
        return std::nullopt;
    };
    double fan_serial = time_ms([&] { run_trials_serial(trials, trial); });
    double fan_parallel = time_ms([&] { run_trials(trials, trial); });
    row("suite fan-out", fan_serial, fan_parallel);

    const std::size_t orbit_n = 200000;
    double orbit_serial = time_ms([&] { orbit_report_serial(orbit_n); });
    double orbit_parallel = time_ms([&] { orbit_report(orbit_n); });
    row("orbit fill", orbit_serial, orbit_parallel);

    std::vector<Word> words = all_reduced_words(3);
    const std::size_t grid = 2048;
    std::vector<long> certs(words.size());
    double cert_serial = time_ms([&] {
        for (std::size_t i = 0; i < words.size(); ++i)
            certs[i] = word_obstruction(words[i], grid);
    });
    double cert_parallel = time_ms([&] {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < static_cast<long long>(words.size()); ++i)
            certs[static_cast<std::size_t>(i)] =
                word_obstruction(words[static_cast<std::size_t>(i)], grid);
    });
    row("certificate batch", cert_serial, cert_parallel);

    long check = 0;
    for (std::size_t i = 0; i < words.size(); ++i)
        check += certs[i] - chern_number(words[i]);
    std::printf("certificate drift: %ld\n", check);
    return check == 0 ? 0 : 1;
}
