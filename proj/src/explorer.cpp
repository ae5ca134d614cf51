#include "simply/explorer.hpp"

#include <algorithm>
#include <cmath>

namespace simply {

std::vector<double> SweepGrid::v_read_values() const {
    std::vector<double> out;
    for (double v = v_read_min; v <= v_read_max + 1e-12; v += v_read_step) out.push_back(v);
    return out;
}

void SweepGrid::validate() const {
    if (r_g_list.empty() || t_list.empty())
        throw config_error("SweepGrid: r_g and temperature lists must be non-empty");
    for (double r : r_g_list)
        if (r <= 0.0) throw config_error("SweepGrid: r_g values must be positive");
    if (v_read_step <= 0.0 || v_set_step <= 0.0)
        throw config_error("SweepGrid: steps must be positive");
    if (v_read_step > 0.025 + 1e-15 || v_set_step > 0.010 + 1e-15)
        throw config_error("SweepGrid: steps exceed the supported resolution");
    if (v_read_min <= 0.0 || v_read_min >= v_read_max || v_set_min <= 0.0 ||
        v_set_min >= v_set_max)
        throw config_error("SweepGrid: voltage ranges are ill-formed");
}

double vset_for_target_wer(const DeviceParams& params, const OperatingPoint& op_template,
                           double r_g, double temperature, double target) {
    if (target <= 1e-12 || target >= 0.5)
        throw search_error("vset_for_target_wer: target outside (1e-12, 0.5)");
    OperatingPoint op = op_template;
    op.r_g = r_g;
    op.temperature = temperature;
    const auto inst = params.nominal_instance();

    auto log_excess = [&](double v_set) {
        op.v_set = v_set;
        return std::log10(set_wer(params, op, inst)) - std::log10(target);
    };

    double lo = 0.4, hi = 1.5;
    if (log_excess(lo) < 0.0 || log_excess(hi) > 0.0)
        throw search_error("vset_for_target_wer: target not bracketed in [0.4, 1.5] V");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double g = log_excess(mid);
        if (std::abs(g) <= 0.02) return mid;
        (g > 0.0 ? lo : hi) = mid;
    }
    throw search_error("vset_for_target_wer: bisection failed to meet log tolerance");
}

namespace {

double tail(double dist, double sigma) {
    if (sigma == 0.0) return dist > 0.0 ? 0.0 : (dist < 0.0 ? 1.0 : 0.5);
    return q_function(dist / sigma);
}

double nominal_avg_rdr(const DeviceParams& params, const OperatingPoint& op) {
    const auto inst = params.nominal_instance();
    const std::pair insts{inst, inst};
    const double rdr00 = gate_rdr(params, {0, 0}, op, insts);
    const double rdr01 = gate_rdr(params, {0, 1}, op, insts);
    return (rdr00 + 2.0 * rdr01) / 4.0;  // the (1,1) row cannot be disturbed
}

// READ-side quantities of one grid point
SweepPoint read_point(const DeviceParams& params, const OperatingPoint& op, std::size_t n,
                      const RngSpec& rng, Execution exec) {
    const ReadPopulations pops = read_populations(params, op, n, rng, exec);
    const auto [rm_nom, rm_3s] = read_margins(pops.sum00, pops.sum_neq);
    const BerReport ber = equal_ber_vref(pops.sum00, pops.sum_neq, op.delta_ref, pops.sum11);

    SweepPoint pt{};
    pt.r_g = op.r_g;
    pt.v_read = op.v_read;
    pt.temperature = op.temperature;
    pt.rm_nom = rm_nom;
    pt.rm_3sigma = rm_3s;
    pt.v_ref = ber.v_ref;
    pt.avg_rdr = nominal_avg_rdr(params, op);
    const double ber_11 = tail(pops.sum11.mu - ber.v_ref - op.delta_ref, pops.sum11.sigma);
    pt.avg_ber = (ber.worst_ber_00 + 2.0 * ber.worst_ber_neq + ber_11) / 4.0;
    return pt;
}

}  // namespace

std::vector<SweepPoint> sweep_read(const DeviceParams& params, const OperatingPoint& op_template,
                                   const SweepGrid& grid, std::size_t n, const RngSpec& rng,
                                   Execution exec) {
    grid.validate();
    const std::vector<double> v_reads = grid.v_read_values();
    const long long total = static_cast<long long>(grid.r_g_list.size() * v_reads.size());
    std::vector<SweepPoint> points(static_cast<std::size_t>(total));
    const bool par = exec == Execution::parallel;
    // grid points are independent; results land in grid order regardless of
    // the execution schedule
#pragma omp parallel for schedule(dynamic) if (par)
    for (long long idx = 0; idx < total; ++idx) {
        const std::size_t ri = static_cast<std::size_t>(idx) / v_reads.size();
        const std::size_t vi = static_cast<std::size_t>(idx) % v_reads.size();
        OperatingPoint op = op_template;
        op.r_g = grid.r_g_list[ri];
        op.v_read = v_reads[vi];
        points[static_cast<std::size_t>(idx)] =
            read_point(params, op, n, rng, Execution::serial);
    }
    return points;
}

std::pair<double, double> find_min_ber(const DeviceParams& params,
                                       const OperatingPoint& op_template, double r_g,
                                       const SweepGrid& grid, std::size_t n, const RngSpec& rng,
                                       Execution exec) {
    SweepGrid one = grid;
    one.r_g_list = {r_g};
    const std::vector<SweepPoint> points = sweep_read(params, op_template, one, n, rng, exec);
    const auto best = std::min_element(points.begin(), points.end(),
                                       [](const SweepPoint& a, const SweepPoint& b) {
                                           return a.avg_ber < b.avg_ber;
                                       });
    return {best->v_read, best->avg_ber};
}

std::vector<SweepPoint> sweep_full(const DeviceParams& params, const OperatingPoint& op_template,
                                   const SweepGrid& grid, std::size_t n, const RngSpec& rng,
                                   double wer_target, Execution exec) {
    grid.validate();
    const std::vector<double> v_reads = grid.v_read_values();

    std::vector<double> v_sets(grid.r_g_list.size());
    for (std::size_t ri = 0; ri < grid.r_g_list.size(); ++ri)
        v_sets[ri] = vset_for_target_wer(params, op_template, grid.r_g_list[ri],
                                         op_template.temperature, wer_target);

    const long long total = static_cast<long long>(grid.r_g_list.size() * v_reads.size());
    std::vector<SweepPoint> points(static_cast<std::size_t>(total));
    const bool par = exec == Execution::parallel;
#pragma omp parallel for schedule(dynamic) if (par)
    for (long long idx = 0; idx < total; ++idx) {
        const std::size_t ri = static_cast<std::size_t>(idx) / v_reads.size();
        const std::size_t vi = static_cast<std::size_t>(idx) % v_reads.size();
        OperatingPoint op = op_template;
        op.r_g = grid.r_g_list[ri];
        op.v_read = v_reads[vi];
        op.v_set = v_sets[ri];
        SweepPoint pt = read_point(params, op, n, rng, Execution::serial);
        const GateReport rep = gate_report(params, op, VrefPolicy::constant(pt.v_ref), n, rng,
                                           Execution::serial);
        pt.v_set = op.v_set;
        pt.wer_00 = rep.rows[0].wer;
        pt.avg_error = rep.avg_error;
        pt.avg_energy = rep.avg_energy;
        points[static_cast<std::size_t>(idx)] = pt;
    }
    return points;
}

std::vector<TemperatureRecord> temperature_analysis(const DeviceParams& params,
                                                    const OperatingPoint& op,
                                                    const std::vector<double>& temperatures,
                                                    std::size_t n, const RngSpec& rng,
                                                    Execution exec) {
    const std::map<double, double> ptat =
        ptat_vref_table(params, op, temperatures, n, rng, exec);
    const auto anchor = ptat.find(300.0);
    if (anchor == ptat.end())
        throw config_error("temperature_analysis: temperature list must include 300 K");
    const VrefPolicy constant = VrefPolicy::constant(anchor->second);
    const VrefPolicy tracking = VrefPolicy::ptat(ptat);

    std::vector<TemperatureRecord> records;
    records.reserve(temperatures.size());
    const auto inst = params.nominal_instance();
    for (double t : temperatures) {
        OperatingPoint point = op;
        point.temperature = t;
        const ReadPopulations pops = read_populations(params, point, n, rng, exec);
        const auto [rm_nom, rm_3s] = read_margins(pops.sum00, pops.sum_neq);

        TemperatureRecord rec{};
        rec.temperature = t;
        rec.avg_rdr = nominal_avg_rdr(params, point);
        rec.wer_00 = set_wer(params, point, inst);
        rec.rm_nom = rm_nom;
        rec.rm_3sigma = rm_3s;
        rec.v_ref_ptat = ptat.at(t);
        const GateReport rep_const = gate_report(params, point, constant, n, rng, exec);
        const GateReport rep_ptat = gate_report(params, point, tracking, n, rng, exec);
        rec.avg_error_const = rep_const.avg_error;
        rec.avg_error_ptat = rep_ptat.avg_error;
        rec.avg_energy = rep_ptat.avg_energy;
        records.push_back(rec);
    }
    return records;
}

}  // namespace simply
