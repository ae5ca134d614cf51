#include "simply/circuit.hpp"

#include <cmath>
#include <span>
#include <vector>

namespace simply {

namespace {

constexpr double kDamping = 0.5;
constexpr double kTolerance = 1e-9;  // V
constexpr int kMaxIterations = 200;

struct DrivenDevice {
    int state;
    DeviceInstance inst;
};

// Damped fixed-point iteration on V_G for N devices sharing r_g. The map is a
// contraction for physical parameters; each device sees v_drive - V_G across
// its junction with the bias-dependent resistance evaluated at |V_MTJ|.
NodeSolution solve_nodes(const DeviceParams& params, std::span<const DrivenDevice> devices,
                         double v_drive, double r_g, double temperature) {
    double v_g = 0.0;
    NodeSolution sol{};
    sol.branch_count = static_cast<int>(devices.size());

    auto parallel_resistance = [&](double node) {
        double inv = 0.0;
        for (const auto& d : devices)
            inv += 1.0 / resistance(params, d.state, v_drive - node, temperature, d.inst);
        return 1.0 / inv;
    };

    int it = 0;
    for (; it < kMaxIterations; ++it) {
        const double target = v_drive * r_g / (r_g + parallel_resistance(v_g));
        const double next = (1.0 - kDamping) * v_g + kDamping * target;
        const bool done = std::abs(next - v_g) < kTolerance;
        v_g = next;
        if (done) break;
    }
    if (it == kMaxIterations) {
        const double target = v_drive * r_g / (r_g + parallel_resistance(v_g));
        throw solver_error("solve_nodes: fixed point did not converge", std::abs(target - v_g));
    }

    sol.v_g = v_g;
    sol.iterations = it + 1;
    for (std::size_t i = 0; i < devices.size(); ++i) {
        const double v_mtj = v_drive - v_g;
        const double r = resistance(params, devices[i].state, v_mtj, temperature,
                                    devices[i].inst);
        sol.branches[i] = {v_mtj, v_mtj / r, r};
    }
    sol.residual = std::abs(sol.total_current() - v_g / r_g) * r_g;
    return sol;
}

}  // namespace

NodeSolution solve_read(const DeviceParams& params, std::pair<int, int> states,
                        const OperatingPoint& op,
                        const std::pair<DeviceInstance, DeviceInstance>& insts) {
    op.validate();
    const DrivenDevice devs[2] = {{states.first, insts.first}, {states.second, insts.second}};
    return solve_nodes(params, devs, op.v_read, op.r_g, op.temperature);
}

NodeSolution solve_single(const DeviceParams& params, int state, double v_drive,
                          const OperatingPoint& op, const DeviceInstance& inst) {
    op.validate();
    if (v_drive == 0.0) throw model_error("solve_single: v_drive must be nonzero");
    const DrivenDevice devs[1] = {{state, inst}};
    return solve_nodes(params, devs, v_drive, op.r_g, op.temperature);
}

double gate_rdr(const DeviceParams& params, std::pair<int, int> states, const OperatingPoint& op,
                const std::pair<DeviceInstance, DeviceInstance>& insts) {
    const NodeSolution sol = solve_read(params, states, op, insts);
    const int state[2] = {states.first, states.second};
    const DeviceInstance inst[2] = {insts.first, insts.second};
    double survive = 1.0;
    for (int i = 0; i < 2; ++i) {
        if (state[i] != 0) continue;  // positive READ bias reinforces stored 1
        survive *= 1.0 - switching_probability(params, sol.branches[i].current, op.t_read,
                                               op.temperature, SwitchDirection::ap_to_p, inst[i]);
    }
    return 1.0 - survive;
}

double set_wer(const DeviceParams& params, const OperatingPoint& op, const DeviceInstance& inst) {
    const NodeSolution pre = solve_single(params, 0, op.v_set, op, inst);
    return switching_survival(params, pre.branches[0].current, op.t_set, op.temperature,
                              SwitchDirection::ap_to_p, inst);
}

double energy_read(const NodeSolution& sol, const OperatingPoint& op) {
    return op.v_read * sol.total_current() * op.t_read;
}

namespace {

// Piecewise-constant two-phase integral of the drive energy: pre-switch
// current until the median switch time, post-switch current afterwards.
double two_phase_energy(const DeviceParams& params, const OperatingPoint& op, double v_drive,
                        double t_pulse, int pre_state, int post_state, SwitchDirection dir,
                        const DeviceInstance& inst) {
    if (t_pulse <= 0.0) return 0.0;
    const NodeSolution pre = solve_single(params, pre_state, v_drive, op, inst);
    const double i_pre = std::abs(pre.branches[0].current);
    const auto t_switch = median_switch_time(params, i_pre, op.temperature, dir, inst);
    const double v = std::abs(v_drive);
    if (!t_switch || *t_switch >= t_pulse) return v * i_pre * t_pulse;
    const NodeSolution post = solve_single(params, post_state, v_drive, op, inst);
    const double i_post = std::abs(post.branches[0].current);
    return v * (i_pre * *t_switch + i_post * (t_pulse - *t_switch));
}

}  // namespace

double energy_set(const DeviceParams& params, const OperatingPoint& op,
                  const DeviceInstance& inst) {
    return two_phase_energy(params, op, op.v_set, op.t_set, 0, 1, SwitchDirection::ap_to_p,
                            inst);
}

double energy_false(const DeviceParams& params, int state, const OperatingPoint& op,
                    const DeviceInstance& inst) {
    if (op.t_reset <= 0.0) return 0.0;
    if (state == 0) {
        // stabilizing pulse, single phase
        const NodeSolution sol = solve_single(params, 0, op.v_reset, op, inst);
        return std::abs(op.v_reset * sol.branches[0].current) * op.t_reset;
    }
    return two_phase_energy(params, op, op.v_reset, op.t_reset, 1, 0, SwitchDirection::p_to_ap,
                            inst);
}

}  // namespace simply
