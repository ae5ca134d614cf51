#include "simply/calibrate.hpp"

#include <cmath>

namespace simply {

namespace {

double safe_log10(double x) { return std::log10(std::max(x, 1e-300)); }

// bisection with an explicit bracket sign check; objective must be monotone
template <typename F>
double bisect(F&& objective, double lo, double hi, double x_tol, const char* constant) {
    double f_lo = objective(lo);
    double f_hi = objective(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo > 0.0) == (f_hi > 0.0))
        throw calibration_error(constant, std::string("calibrate: no sign change for ") +
                                              constant + " over its bracket");
    while (hi - lo > x_tol) {
        const double mid = 0.5 * (lo + hi);
        ((objective(mid) > 0.0) == (f_lo > 0.0) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double measured_rdr(const DeviceParams& params, const OperatingPoint& op) {
    const auto inst = params.nominal_instance();
    return gate_rdr(params, {0, 0}, op, {inst, inst});
}

double measured_rm_3sigma(const DeviceParams& params, const OperatingPoint& op, std::size_t n,
                          const RngSpec& rng, Execution exec) {
    const ReadPopulations pops = read_populations(params, op, n, rng, exec);
    return read_margins(pops.sum00, pops.sum_neq).second;
}

}  // namespace

CalibrationResult calibrate(const DeviceParams& start, const CalibrationAnchors& anchors,
                            std::size_t n, const RngSpec& rng, Execution exec) {
    DeviceParams p = start;
    const OperatingPoint& op = anchors.op;
    op.validate();

    CalibrationResult result{};
    for (int outer = 0; outer < 10; ++outer) {
        const DeviceParams before = p;

        // disturb rate fixes the stability/critical-current balance
        p.n_eff = bisect(
            [&](double n_eff) {
                DeviceParams trial = p;
                trial.n_eff = n_eff;
                return safe_log10(measured_rdr(trial, op)) - safe_log10(anchors.rdr_00);
            },
            0.7, 1.0, 1e-6, "n_eff");

        // write failure rate fixes the critical-current scale
        p.k_ic = bisect(
            [&](double k_ic) {
                DeviceParams trial = p;
                trial.k_ic = k_ic;
                return safe_log10(set_wer(trial, op, trial.nominal_instance())) -
                       safe_log10(anchors.wer_00);
            },
            0.05, 1.5, 1e-6, "k_ic");

        // margin at the 3-sigma corner fixes the oxide sensitivity
        p.c_tox = bisect(
            [&](double c_tox) {
                DeviceParams trial = p;
                trial.c_tox = c_tox;
                return anchors.rm_3sigma - measured_rm_3sigma(trial, op, n, rng, exec);
            },
            1e9, 2e10, 1e5, "c_tox");

        // comparator energy closes the (1,1) row by construction
        const auto inst = p.nominal_instance();
        p.e_comp = anchors.energy_11 - energy_read(solve_read(p, {1, 1}, op, {inst, inst}), op);

        result.outer_iterations = outer + 1;
        auto settled = [](double a, double b) { return std::abs(a - b) <= 1e-3 * std::abs(b); };
        if (settled(before.n_eff, p.n_eff) && settled(before.k_ic, p.k_ic) &&
            settled(before.c_tox, p.c_tox) && settled(before.e_comp, p.e_comp))
            break;
    }

    p.validate();
    result.params = p;
    result.residual_rdr_ratio = measured_rdr(p, op) / anchors.rdr_00;
    result.residual_wer_decades =
        std::log10(set_wer(p, op, p.nominal_instance())) - std::log10(anchors.wer_00);
    result.residual_rm_3sigma = measured_rm_3sigma(p, op, n, rng, exec) - anchors.rm_3sigma;
    return result;
}

bool HeldoutReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

HeldoutReport validate_heldout(const DeviceParams& params, std::size_t n, const RngSpec& rng,
                               Execution exec) {
    const OperatingPoint op{};  // the reference operating point
    HeldoutReport rep;

    auto add_rel = [&](std::string name, double measured, double target, double rel) {
        rep.entries.push_back(
            {std::move(name), measured, target, std::abs(measured - target) <= rel * target});
    };
    auto add_factor = [&](std::string name, double measured, double target, double factor) {
        const bool pass = measured > 0.0 && measured <= target * factor &&
                          measured >= target / factor;
        rep.entries.push_back({std::move(name), measured, target, pass});
    };

    add_rel("vset_target_5k", vset_for_target_wer(params, op, 5e3, 300.0, 1e-7), 0.67, 0.10);
    add_rel("vset_target_30k", vset_for_target_wer(params, op, 30e3, 300.0, 1e-7), 1.24, 0.10);

    const ReadPopulations pops = read_populations(params, op, n, rng, exec);
    const BerReport ber = equal_ber_vref(pops.sum00, pops.sum_neq, op.delta_ref, pops.sum11);
    rep.entries.push_back({"v_ref", ber.v_ref, 150.8e-3,
                           std::abs(ber.v_ref - 150.8e-3) <= 5e-3});
    add_factor("balanced_ber", ber.balanced_ber, 2.6e-5, 3.0);
    add_factor("worst_ber_00", ber.worst_ber_00, 1.7e-3, 3.0);
    add_factor("worst_ber_neq", ber.worst_ber_neq, 7.8e-4, 3.0);

    const GateReport gate = gate_report_balanced(params, op, n, rng, exec);
    add_factor("avg_error", gate.avg_error, 8.2e-4, 2.0);
    add_rel("avg_energy", gate.avg_energy, 160.1e-15, 0.10);
    add_rel("energy_00", gate.rows[0].energy, 318.2e-15, 0.15);
    add_rel("energy_01", gate.rows[1].energy, 104.2e-15, 0.15);
    return rep;
}

}  // namespace simply
