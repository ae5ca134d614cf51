#pragma once

#include <map>
#include <variant>

#include "simply/stats.hpp"

namespace simply {

// Comparator reference policy: a fixed value or a per-temperature table.
class VrefPolicy {
public:
    static VrefPolicy constant(double v_ref) { return VrefPolicy(v_ref); }
    static VrefPolicy ptat(std::map<double, double> table) {
        return VrefPolicy(std::move(table));
    }

    double resolve(double temperature) const;
    bool is_ptat() const { return std::holds_alternative<std::map<double, double>>(value_); }

private:
    explicit VrefPolicy(double v) : value_(v) {}
    explicit VrefPolicy(std::map<double, double> t) : value_(std::move(t)) {}
    std::variant<double, std::map<double, double>> value_;
};

// One row of the per-combination report.
struct ComboReport {
    std::pair<int, int> combo;
    double rdr = 0.0;
    double ber = 0.0;
    double wer = 0.0;  // only the (0,0) row carries a SET
    double error = 0.0;
    double energy = 0.0;  // J
    int output_bit = 0;
};

struct GateReport {
    std::array<ComboReport, 4> rows{};
    double avg_error = 0.0;
    double avg_energy = 0.0;
    double v_ref = 0.0;
};

struct FalseReport {
    double error = 0.0;
    double energy = 0.0;
    int final_state = 0;
};

int imply_output(int p, int q);

ComboReport execute_simply(const DeviceParams& params, std::pair<int, int> combo,
                           const OperatingPoint& op, const VrefPolicy& policy,
                           const ReadPopulations& pops);

// error-free sanity check of the protocol (no variations, no reference shift)
bool truth_table_check(const DeviceParams& params, const OperatingPoint& op);

FalseReport false_op(const DeviceParams& params, int device_state, const OperatingPoint& op);

GateReport gate_report(const DeviceParams& params, const OperatingPoint& op,
                       const VrefPolicy& policy, std::size_t n, const RngSpec& rng,
                       Execution exec = Execution::parallel);

// convenience: balanced reference derived from a fresh campaign at op
GateReport gate_report_balanced(const DeviceParams& params, const OperatingPoint& op,
                                std::size_t n, const RngSpec& rng,
                                Execution exec = Execution::parallel);

// balanced V_REF per temperature; strictly increasing for a valid model
std::map<double, double> ptat_vref_table(const DeviceParams& params, const OperatingPoint& op,
                                         const std::vector<double>& temperatures, std::size_t n,
                                         const RngSpec& rng,
                                         Execution exec = Execution::parallel);

}  // namespace simply
