#pragma once

#include <array>
#include <optional>

#include "simply/constants.hpp"
#include "simply/errors.hpp"

namespace simply {

// One Monte Carlo sample of the device geometry.
struct DeviceInstance {
    double t_ox;  // oxide thickness, m
    double area;  // cross-section area, m^2

    void validate() const {
        if (t_ox <= 0.0 || area <= 0.0)
            throw model_error("DeviceInstance: geometry must be strictly positive");
    }
};

enum class SwitchDirection {
    ap_to_p,  // bit 0 -> 1, favored by positive top-electrode bias
    p_to_ap,  // bit 1 -> 0
};

// Temperature row of the parameter table.
struct ThermalRow {
    double temperature;               // K
    double polarization;              // unitless
    double saturation_magnetization;  // Tesla
    double interfacial_anisotropy;    // J/m^2
};

// Interpolated temperature-dependent parameters.
struct ThermalParams {
    double polarization;
    double saturation_magnetization;  // Tesla
    double interfacial_anisotropy;    // J/m^2
    double tmr0;                      // zero-bias TMR ratio
};

// Full device description: geometry, material table and calibration constants.
struct DeviceParams {
    double diameter = 30e-9;              // m
    double free_layer_thickness = 1.15e-9;  // m
    double oxide_thickness = 0.85e-9;     // nominal t_OX, m
    double resistance_area = 10e-12;      // parallel-state RA, Ohm*m^2
    double half_tmr_bias = 0.5;           // V at which TMR halves
    double damping = 0.03;                // Gilbert damping

    std::array<ThermalRow, 3> temp_table{{
        {250.0, 0.68, 1.64, 1.41e-3},
        {300.0, 0.66, 1.58, 1.30e-3},
        {350.0, 0.64, 1.51, 1.18e-3},
    }};
    // zero-bias TMR is linear through these two points
    std::array<std::pair<double, double>, 2> tmr0_anchors{{{250.0, 1.66}, {350.0, 1.34}}};

    double sigma_tox_rel = 0.01;   // relative sigma of t_OX
    double sigma_area_rel = 0.05;  // relative sigma of area

    // calibration constants
    double n_eff = 1.0;     // effective demagnetization factor difference
    double k_ic = 1.0;      // critical-current scale
    double k_w = 1.0;       // precessional-rate scale
    double c_tox = 6.5e9;   // resistance sensitivity to oxide thickness, 1/m
    double e_comp = 42e-15; // comparator energy per compare, J

    double nominal_area() const;
    DeviceInstance nominal_instance() const { return {oxide_thickness, nominal_area()}; }

    void validate() const;

    // uncalibrated starting point
    static DeviceParams defaults() { return {}; }
    // constants frozen from the calibration run committed with the repo
    static DeviceParams calibrated();
};

ThermalParams interpolate_thermal(const DeviceParams& params, double temperature);

double resistance_parallel(const DeviceParams& params, const DeviceInstance& inst);

// bias- and temperature-dependent TMR ratio
double tmr(const DeviceParams& params, double bias, double temperature);

// state: 1 = parallel (R_L), 0 = antiparallel (R_H)
double resistance(const DeviceParams& params, int state, double bias, double temperature,
                  const DeviceInstance& inst);

double h_k_eff(const DeviceParams& params, double temperature, const DeviceInstance& inst);

double thermal_stability(const DeviceParams& params, double temperature,
                         const DeviceInstance& inst);

double critical_current(const DeviceParams& params, double temperature, SwitchDirection dir,
                        const DeviceInstance& inst);

// Probability that a destabilizing current of magnitude `current` applied for
// `pulse_width` switches the free layer. Clamped to be non-decreasing in the
// overdrive ratio across the activation/precessional crossover.
double switching_probability(const DeviceParams& params, double current, double pulse_width,
                             double temperature, SwitchDirection dir,
                             const DeviceInstance& inst);

// 1 - switching_probability, computed without cancellation for small failure rates
double switching_survival(const DeviceParams& params, double current, double pulse_width,
                          double temperature, SwitchDirection dir, const DeviceInstance& inst);

// Pulse width at which the switching probability of the active regime reaches
// 0.5; nullopt when no switch occurs within 1 us.
std::optional<double> median_switch_time(const DeviceParams& params, double current,
                                         double temperature, SwitchDirection dir,
                                         const DeviceInstance& inst);

}  // namespace simply
