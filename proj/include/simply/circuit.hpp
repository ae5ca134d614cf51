#pragma once

#include <array>
#include <utility>

#include "simply/device.hpp"

namespace simply {

// One experiment's bias/timing configuration.
struct OperatingPoint {
    double temperature = 300.0;  // K
    double r_g = 10e3;           // load resistor, Ohm
    double v_read = 0.35;        // V
    double t_read = 10e-9;       // s
    double v_set = 0.78;         // V
    double t_set = 10e-9;        // s
    double v_reset = -0.78;      // V, negative
    double t_reset = 10e-9;      // s
    double delta_ref = 5e-3;     // comparator reference uncertainty, V

    void validate() const {
        if (r_g <= 0.0) throw model_error("OperatingPoint: r_g must be positive");
        if (v_read <= 0.0 || v_set <= 0.0)
            throw model_error("OperatingPoint: v_read and v_set must be positive");
        if (v_reset >= 0.0) throw model_error("OperatingPoint: v_reset must be negative");
        if (t_read <= 0.0 || t_set <= 0.0 || t_reset < 0.0)
            throw model_error("OperatingPoint: pulse widths must be positive");
        if (delta_ref < 0.0) throw model_error("OperatingPoint: delta_ref must be non-negative");
    }
};

// Converged nonlinear-divider solution.
struct NodeSolution {
    struct Branch {
        double v_mtj;       // V across the device (drive minus node)
        double current;     // A through the device
        double resistance;  // Ohm at the converged bias
    };
    double v_g = 0.0;
    std::array<Branch, 2> branches{};
    int branch_count = 0;
    int iterations = 0;
    double residual = 0.0;  // |sum(I) - V_G/R_G| * R_G, volts

    double total_current() const {
        double s = 0.0;
        for (int i = 0; i < branch_count; ++i) s += branches[i].current;
        return s;
    }
};

struct EnergyBreakdown {
    double e_read = 0.0;
    double e_set = 0.0;
    double e_false = 0.0;
    double e_comp = 0.0;
    double total() const { return e_read + e_set + e_false + e_comp; }
};

// READ phase: both devices driven with v_read, sharing r_g.
NodeSolution solve_read(const DeviceParams& params, std::pair<int, int> states,
                        const OperatingPoint& op,
                        const std::pair<DeviceInstance, DeviceInstance>& insts);

// SET/FALSE phase: a single driven device (the other driver is HI-Z).
NodeSolution solve_single(const DeviceParams& params, int state, double v_drive,
                          const OperatingPoint& op, const DeviceInstance& inst);

// probability that READ disturbs at least one stored-0 device
double gate_rdr(const DeviceParams& params, std::pair<int, int> states, const OperatingPoint& op,
                const std::pair<DeviceInstance, DeviceInstance>& insts);

// write failure probability of the conditional SET, at the pre-switch current
double set_wer(const DeviceParams& params, const OperatingPoint& op, const DeviceInstance& inst);

double energy_read(const NodeSolution& sol, const OperatingPoint& op);

double energy_set(const DeviceParams& params, const OperatingPoint& op,
                  const DeviceInstance& inst);

double energy_false(const DeviceParams& params, int state, const OperatingPoint& op,
                    const DeviceInstance& inst);

}  // namespace simply
