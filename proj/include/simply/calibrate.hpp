#pragma once

#include <string>
#include <vector>

#include "simply/explorer.hpp"

namespace simply {

// Fitting inputs; every other reported number stays held out for validation.
struct CalibrationAnchors {
    double rdr_00 = 8.9e-10;     // gate disturb rate for P=Q=0
    double wer_00 = 1e-7;        // write failure at the anchor SET amplitude
    double rm_3sigma = 10.6e-3;  // V
    double energy_11 = 113.9e-15;  // J, READ + comparator of the (1,1) row

    OperatingPoint op{};  // anchor operating point (defaults are the anchor)
};

struct CalibrationResult {
    DeviceParams params;
    double residual_rdr_ratio = 0.0;   // measured / anchor
    double residual_wer_decades = 0.0; // log10(measured) - log10(anchor)
    double residual_rm_3sigma = 0.0;   // measured - anchor, V
    int outer_iterations = 0;
};

struct HeldoutEntry {
    std::string name;
    double measured = 0.0;
    double target = 0.0;
    bool pass = false;
};

struct HeldoutReport {
    std::vector<HeldoutEntry> entries;
    bool all_pass() const;
};

// Sequential 1-D root finds iterated to joint convergence:
//   n_eff from rdr_00, k_ic from wer_00, c_tox from rm_3sigma,
//   e_comp = energy_11 minus the computed (1,1) READ energy.
CalibrationResult calibrate(const DeviceParams& start, const CalibrationAnchors& anchors,
                            std::size_t n, const RngSpec& rng,
                            Execution exec = Execution::parallel);

HeldoutReport validate_heldout(const DeviceParams& params, std::size_t n, const RngSpec& rng,
                               Execution exec = Execution::parallel);

}  // namespace simply
