#pragma once

#include "simply/gate.hpp"

namespace simply {

struct SweepGrid {
    std::vector<double> r_g_list{5e3, 10e3, 15e3, 20e3, 25e3, 30e3};
    double v_read_min = 0.2, v_read_max = 1.0, v_read_step = 0.025;
    double v_set_min = 0.5, v_set_max = 1.3, v_set_step = 0.01;
    std::vector<double> t_list{250, 275, 300, 325, 350};

    std::vector<double> v_read_values() const;
    void validate() const;
};

struct SweepPoint {
    double r_g = 0.0;
    double v_read = 0.0;
    double v_set = 0.0;
    double temperature = 300.0;
    double rm_nom = 0.0;
    double rm_3sigma = 0.0;
    double v_ref = 0.0;
    double avg_rdr = 0.0;
    double avg_ber = 0.0;
    double wer_00 = 0.0;
    double avg_error = 0.0;
    double avg_energy = 0.0;
};

// SET amplitude reaching the target write failure rate, by bisection on
// log10(WER) to 0.02 decades
double vset_for_target_wer(const DeviceParams& params, const OperatingPoint& op_template,
                           double r_g, double temperature, double target);

// READ quantities over (r_g, v_read)
std::vector<SweepPoint> sweep_read(const DeviceParams& params, const OperatingPoint& op_template,
                                   const SweepGrid& grid, std::size_t n, const RngSpec& rng,
                                   Execution exec = Execution::parallel);

// (v_read*, ber*) minimizing the average worst-case BER along the grid
std::pair<double, double> find_min_ber(const DeviceParams& params,
                                       const OperatingPoint& op_template, double r_g,
                                       const SweepGrid& grid, std::size_t n, const RngSpec& rng,
                                       Execution exec = Execution::parallel);

// full error/energy maps with v_set pinned per r_g to the target-WER value
std::vector<SweepPoint> sweep_full(const DeviceParams& params, const OperatingPoint& op_template,
                                   const SweepGrid& grid, std::size_t n, const RngSpec& rng,
                                   double wer_target = 1e-7,
                                   Execution exec = Execution::parallel);

struct TemperatureRecord {
    double temperature = 0.0;
    double avg_rdr = 0.0;
    double wer_00 = 0.0;
    double rm_nom = 0.0;
    double rm_3sigma = 0.0;
    double v_ref_ptat = 0.0;
    double avg_error_const = 0.0;
    double avg_error_ptat = 0.0;
    double avg_energy = 0.0;
};

// per-temperature study under both reference policies; the constant policy
// holds the balanced value extracted at 300 K
std::vector<TemperatureRecord> temperature_analysis(const DeviceParams& params,
                                                    const OperatingPoint& op,
                                                    const std::vector<double>& temperatures,
                                                    std::size_t n, const RngSpec& rng,
                                                    Execution exec = Execution::parallel);

}  // namespace simply
