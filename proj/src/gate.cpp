#include "simply/gate.hpp"

#include <cmath>

namespace simply {

double VrefPolicy::resolve(double temperature) const {
    if (const double* v = std::get_if<double>(&value_)) return *v;
    const auto& table = std::get<std::map<double, double>>(value_);
    const auto it = table.find(temperature);
    if (it == table.end())
        throw config_error("VrefPolicy: no PTAT table entry for requested temperature");
    return it->second;
}

int imply_output(int p, int q) { return (p == 0) ? 1 : q; }

namespace {

double tail(double dist, double sigma) {
    if (sigma == 0.0) return dist > 0.0 ? 0.0 : (dist < 0.0 ? 1.0 : 0.5);
    return q_function(dist / sigma);
}

// worst-case misclassification tail of the relevant side under a +-delta
// reference shift
double combo_ber(std::pair<int, int> combo, const ReadPopulations& pops, double v_ref,
                 double delta) {
    if (combo == std::pair{0, 0}) return tail(v_ref - delta - pops.sum00.mu, pops.sum00.sigma);
    if (combo == std::pair{1, 1}) return tail(pops.sum11.mu - v_ref - delta, pops.sum11.sigma);
    return tail(pops.sum_neq.mu - v_ref - delta, pops.sum_neq.sigma);
}

GateReport build_report(const DeviceParams& params, const OperatingPoint& op, double v_ref,
                        const ReadPopulations& pops) {
    const auto nominal = params.nominal_instance();
    const std::pair insts{nominal, nominal};
    const std::pair<int, int> combos[4] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

    GateReport rep{};
    rep.v_ref = v_ref;
    double err_sum = 0.0, energy_sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        const auto combo = combos[i];
        ComboReport row{};
        row.combo = combo;
        row.rdr = gate_rdr(params, combo, op, insts);
        row.ber = combo_ber(combo, pops, v_ref, op.delta_ref);
        row.energy = energy_read(solve_read(params, combo, op, insts), op) + params.e_comp;
        if (combo == std::pair{0, 0}) {
            row.wer = set_wer(params, op, nominal);
            row.energy += energy_set(params, op, nominal);
        }
        row.error = 1.0 - (1.0 - row.rdr) * (1.0 - row.ber) * (1.0 - row.wer);
        row.output_bit = imply_output(combo.first, combo.second);
        err_sum += row.error;
        energy_sum += row.energy;
        rep.rows[i] = row;
    }
    rep.avg_error = err_sum / 4.0;
    rep.avg_energy = energy_sum / 4.0;
    return rep;
}

}  // namespace

ComboReport execute_simply(const DeviceParams& params, std::pair<int, int> combo,
                           const OperatingPoint& op, const VrefPolicy& policy,
                           const ReadPopulations& pops) {
    const double v_ref = policy.resolve(op.temperature);
    const GateReport rep = build_report(params, op, v_ref, pops);
    for (const auto& row : rep.rows)
        if (row.combo == combo) return row;
    throw model_error("execute_simply: unreachable combo");
}

bool truth_table_check(const DeviceParams& params, const OperatingPoint& op) {
    DeviceParams nominal_only = params;
    nominal_only.sigma_tox_rel = 0.0;
    nominal_only.sigma_area_rel = 0.0;
    const auto inst = nominal_only.nominal_instance();
    const std::pair insts{inst, inst};

    const double vg00 = solve_read(nominal_only, {0, 0}, op, insts).v_g;
    const double vg_neq = solve_read(nominal_only, {0, 1}, op, insts).v_g;
    const double v_ref = 0.5 * (vg00 + vg_neq);

    for (int p = 0; p <= 1; ++p) {
        for (int q = 0; q <= 1; ++q) {
            const double vg = solve_read(nominal_only, {p, q}, op, insts).v_g;
            const bool detected = vg < v_ref;
            const int q_out = detected ? 1 : q;
            if (q_out != imply_output(p, q)) return false;
            if (detected != (p == 0 && q == 0)) return false;
            // P is never driven outside READ, so its state is p by construction
        }
    }
    return true;
}

FalseReport false_op(const DeviceParams& params, int device_state, const OperatingPoint& op) {
    op.validate();
    const auto inst = params.nominal_instance();
    FalseReport rep{};
    rep.final_state = 0;
    rep.energy = energy_false(params, device_state, op, inst);
    if (device_state == 1) {
        const NodeSolution pre = solve_single(params, 1, op.v_reset, op, inst);
        rep.error = switching_survival(params, std::abs(pre.branches[0].current), op.t_reset,
                                       op.temperature, SwitchDirection::p_to_ap, inst);
    }
    return rep;
}

GateReport gate_report(const DeviceParams& params, const OperatingPoint& op,
                       const VrefPolicy& policy, std::size_t n, const RngSpec& rng,
                       Execution exec) {
    const ReadPopulations pops = read_populations(params, op, n, rng, exec);
    return build_report(params, op, policy.resolve(op.temperature), pops);
}

GateReport gate_report_balanced(const DeviceParams& params, const OperatingPoint& op,
                                std::size_t n, const RngSpec& rng, Execution exec) {
    const ReadPopulations pops = read_populations(params, op, n, rng, exec);
    const BerReport ber = equal_ber_vref(pops.sum00, pops.sum_neq, op.delta_ref, pops.sum11);
    return build_report(params, op, ber.v_ref, pops);
}

std::map<double, double> ptat_vref_table(const DeviceParams& params, const OperatingPoint& op,
                                         const std::vector<double>& temperatures, std::size_t n,
                                         const RngSpec& rng, Execution exec) {
    std::map<double, double> table;
    for (double t : temperatures) {
        OperatingPoint point = op;
        point.temperature = t;
        const ReadPopulations pops = read_populations(params, point, n, rng, exec);
        table[t] = equal_ber_vref(pops.sum00, pops.sum_neq, op.delta_ref).v_ref;
    }
    double prev = 0.0;
    for (const auto& [t, v] : table) {
        if (v <= prev)
            throw model_error("ptat_vref_table: reference table is not increasing in T");
        prev = v;
    }
    return table;
}

}  // namespace simply
