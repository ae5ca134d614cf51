#include "simply/stats.hpp"

#include <cmath>
#include <numbers>

namespace simply {

double SubStream::next_gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
}

double SubStream::next_truncated_gaussian(double bound) {
    for (;;) {
        const double z = next_gaussian();
        if (std::abs(z) <= bound) return z;
    }
}

DeviceInstance sample_instance(const RngSpec& rng, std::uint64_t trial, std::uint64_t device,
                               const DeviceParams& params) {
    SubStream stream(rng.master_seed, trial, device);
    const double z_tox = stream.next_truncated_gaussian(4.0);
    const double z_area = stream.next_truncated_gaussian(4.0);
    DeviceInstance inst{
        params.oxide_thickness * (1.0 + params.sigma_tox_rel * z_tox),
        params.nominal_area() * (1.0 + params.sigma_area_rel * z_area),
    };
    inst.validate();
    return inst;
}

double q_function(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

GaussianSummary summarize(const std::vector<double>& samples) {
    GaussianSummary s{};
    s.n = samples.size();
    if (s.n < 2) throw model_error("summarize: need at least two samples");
    double sum = 0.0;
    for (double v : samples) sum += v;
    s.mu = sum / static_cast<double>(s.n);
    double ss = 0.0;
    for (double v : samples) ss += (v - s.mu) * (v - s.mu);
    s.sigma = std::sqrt(ss / static_cast<double>(s.n - 1));
    return s;
}

std::vector<double> read_campaign(const DeviceParams& params, std::pair<int, int> combo,
                                  const OperatingPoint& op, std::size_t n, const RngSpec& rng,
                                  Execution exec) {
    std::vector<double> vg(n);
    const bool par = exec == Execution::parallel;
    // trials are independent; each writes its own slot, so the parallel and
    // serial paths produce identical vectors
#pragma omp parallel for schedule(static) if (par)
    for (long long t = 0; t < static_cast<long long>(n); ++t) {
        const auto ti = static_cast<std::uint64_t>(t);
        const std::pair<DeviceInstance, DeviceInstance> insts{
            sample_instance(rng, ti, 0, params), sample_instance(rng, ti, 1, params)};
        vg[static_cast<std::size_t>(t)] = solve_read(params, combo, op, insts).v_g;
    }
    return vg;
}

GaussianSummary run_read_mc(const DeviceParams& params, std::pair<int, int> combo,
                            const OperatingPoint& op, std::size_t n, const RngSpec& rng,
                            Execution exec) {
    if (n < 100) throw model_error("run_read_mc: need at least 100 trials");
    return summarize(read_campaign(params, combo, op, n, rng, exec));
}

ReadPopulations read_populations(const DeviceParams& params, const OperatingPoint& op,
                                 std::size_t n, const RngSpec& rng, Execution exec) {
    ReadPopulations pops;
    pops.vg00 = read_campaign(params, {0, 0}, op, n, rng, exec);
    pops.vg01 = read_campaign(params, {0, 1}, op, n, rng, exec);
    pops.vg10 = read_campaign(params, {1, 0}, op, n, rng, exec);
    pops.vg11 = read_campaign(params, {1, 1}, op, n, rng, exec);
    pops.sum00 = summarize(pops.vg00);
    pops.sum11 = summarize(pops.vg11);
    std::vector<double> pooled = pops.vg01;
    pooled.insert(pooled.end(), pops.vg10.begin(), pops.vg10.end());
    pops.sum_neq = summarize(pooled);
    return pops;
}

std::pair<double, double> read_margins(const GaussianSummary& sum00,
                                       const GaussianSummary& sum_neq) {
    const double rm_nom = sum_neq.mu - sum00.mu;
    return {rm_nom, rm_nom - 3.0 * (sum_neq.sigma + sum00.sigma)};
}

BerReport equal_ber_vref(const GaussianSummary& sum00, const GaussianSummary& sum_neq,
                         double delta, const std::optional<GaussianSummary>& sum11) {
    if (sum00.mu >= sum_neq.mu)
        throw model_error("equal_ber_vref: populations are not ordered");

    BerReport rep{};
    if (sum00.sigma == 0.0 || sum_neq.sigma == 0.0) {
        rep.v_ref = 0.5 * (sum00.mu + sum_neq.mu);
        rep.balanced_ber = 0.0;
    } else {
        // Q((v - mu00)/s00) - Q((mu_neq - v)/s_neq) is monotone decreasing in v
        auto imbalance = [&](double v) {
            return q_function((v - sum00.mu) / sum00.sigma) -
                   q_function((sum_neq.mu - v) / sum_neq.sigma);
        };
        double lo = sum00.mu, hi = sum_neq.mu;
        constexpr double tol = 1e-6;  // V
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            (imbalance(mid) > 0.0 ? lo : hi) = mid;
        }
        rep.v_ref = 0.5 * (lo + hi);
        rep.balanced_ber = q_function((rep.v_ref - sum00.mu) / sum00.sigma);
    }

    auto tail = [](double dist, double sigma) {
        if (sigma == 0.0) return dist > 0.0 ? 0.0 : (dist < 0.0 ? 1.0 : 0.5);
        return q_function(dist / sigma);
    };
    rep.worst_ber_00 = tail(rep.v_ref - delta - sum00.mu, sum00.sigma);
    rep.worst_ber_neq = tail(sum_neq.mu - rep.v_ref - delta, sum_neq.sigma);
    if (sum11) rep.ber_11 = tail(sum11->mu - rep.v_ref, sum11->sigma);
    return rep;
}

}  // namespace simply
