// Compares the serial reference path of the Monte Carlo READ campaign with
// the OpenMP path and checks that both produce identical samples.
#include <chrono>
#include <cstdio>
#include <string>

#include "simply/stats.hpp"

int main(int argc, char** argv) {
    const std::size_t n = argc > 1 ? std::stoull(argv[1]) : 20000;
    const simply::DeviceParams params = simply::DeviceParams::calibrated();
    const simply::OperatingPoint op{};
    const simply::RngSpec rng{12345};

    auto time_campaign = [&](simply::Execution exec) {
        const auto start = std::chrono::steady_clock::now();
        auto vg = simply::read_campaign(params, {0, 0}, op, n, rng, exec);
        const auto stop = std::chrono::steady_clock::now();
        return std::pair{std::chrono::duration<double, std::milli>(stop - start).count(),
                         std::move(vg)};
    };

    const auto [t_serial, vg_serial] = time_campaign(simply::Execution::serial);
    const auto [t_parallel, vg_parallel] = time_campaign(simply::Execution::parallel);

    std::printf("trials        %zu\n", n);
    std::printf("serial        %.1f ms\n", t_serial);
    std::printf("parallel      %.1f ms\n", t_parallel);
    std::printf("speedup       %.2fx\n", t_serial / t_parallel);
    const bool identical = vg_serial == vg_parallel;
    std::printf("identical     %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
