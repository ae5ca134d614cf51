#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "simply/circuit.hpp"
#include "simply/rng.hpp"

namespace simply {

enum class Execution { serial, parallel };

struct GaussianSummary {
    double mu = 0.0;
    double sigma = 0.0;
    std::size_t n = 0;
};

struct BerReport {
    double v_ref = 0.0;
    double balanced_ber = 0.0;
    double worst_ber_00 = 0.0;   // at v_ref - delta, missed detection of P=Q=0
    double worst_ber_neq = 0.0;  // at v_ref + delta, false detection for P != Q
    double ber_11 = 0.0;
};

DeviceInstance sample_instance(const RngSpec& rng, std::uint64_t trial, std::uint64_t device,
                               const DeviceParams& params);

// upper Gaussian tail
double q_function(double z);

GaussianSummary summarize(const std::vector<double>& samples);

// V_G samples of one READ campaign; trial t uses devices (t, 0) and (t, 1)
std::vector<double> read_campaign(const DeviceParams& params, std::pair<int, int> combo,
                                  const OperatingPoint& op, std::size_t n, const RngSpec& rng,
                                  Execution exec = Execution::parallel);

GaussianSummary run_read_mc(const DeviceParams& params, std::pair<int, int> combo,
                            const OperatingPoint& op, std::size_t n, const RngSpec& rng,
                            Execution exec = Execution::parallel);

// the three V_G populations of one operating point; (0,1) and (1,0) pooled
struct ReadPopulations {
    GaussianSummary sum00, sum_neq, sum11;
    std::vector<double> vg00, vg01, vg10, vg11;
};

ReadPopulations read_populations(const DeviceParams& params, const OperatingPoint& op,
                                 std::size_t n, const RngSpec& rng,
                                 Execution exec = Execution::parallel);

// (RM_nom, RM_3sigma)
std::pair<double, double> read_margins(const GaussianSummary& sum00,
                                       const GaussianSummary& sum_neq);

// reference voltage balancing the 00 and P!=Q tail probabilities, plus the
// worst-case tails under a +-delta reference shift
BerReport equal_ber_vref(const GaussianSummary& sum00, const GaussianSummary& sum_neq,
                         double delta, const std::optional<GaussianSummary>& sum11 = {});

}  // namespace simply
