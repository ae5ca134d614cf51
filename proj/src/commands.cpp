#include "simply/commands.hpp"

#include <charconv>
#include <fstream>

#include <json.hpp>

#include "simply/calibrate.hpp"

namespace simply {

namespace {

using nlohmann::json;

// shortest round-trip representation
std::string fmt_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string cell_text(const json& cell) {
    if (cell.is_number_float()) return fmt_double(cell.get<double>());
    if (cell.is_string()) return cell.get<std::string>();
    return cell.dump();
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<json>> rows;

    void add(std::vector<json> row) { rows.push_back(std::move(row)); }
};

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw io_error("cannot create output directory " + dir.string() + ": " + ec.message());
    if (!std::filesystem::is_directory(dir))
        throw io_error("output path " + dir.string() + " is not a directory");
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open output file " + path.string());
    out << text;
    if (!out) throw io_error("failed writing " + path.string());
}

// stable schema: fixed column order in both serializations
void write_table(const RunConfig& config, const std::string& stem, const Table& table) {
    ensure_dir(config.out_dir);
    if (config.format == OutputFormat::csv) {
        std::string text;
        for (std::size_t i = 0; i < table.header.size(); ++i)
            text += (i ? "," : "") + table.header[i];
        text += '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                text += (i ? "," : "") + cell_text(row[i]);
            text += '\n';
        }
        write_text(config.out_dir / (stem + ".csv"), text);
    } else {
        json rows = json::array();
        for (const auto& row : table.rows) {
            json obj = json::object();
            for (std::size_t i = 0; i < row.size(); ++i) obj[table.header[i]] = row[i];
            rows.push_back(std::move(obj));
        }
        write_text(config.out_dir / (stem + ".json"), rows.dump(2) + "\n");
    }
}

void write_json_file(const RunConfig& config, const std::string& name, const json& value) {
    ensure_dir(config.out_dir);
    write_text(config.out_dir / name, value.dump(2) + "\n");
}

}  // namespace

void cmd_characterize(const RunConfig& config) {
    const DeviceParams& dev = config.device;
    const auto inst = dev.nominal_instance();

    Table rt{{"T_K", "R_L_ohm", "R_H_ohm", "TMR0"}, {}};
    Table dic{{"T_K", "delta", "I_c_ap_to_p_A", "I_c_p_to_ap_A"}, {}};
    for (double t = 250.0; t <= 350.0 + 1e-9; t += 10.0) {
        rt.add({t, resistance_parallel(dev, inst), resistance(dev, 0, 0.0, t, inst),
                interpolate_thermal(dev, t).tmr0});
        dic.add({t, thermal_stability(dev, t, inst),
                 critical_current(dev, t, SwitchDirection::ap_to_p, inst),
                 critical_current(dev, t, SwitchDirection::p_to_ap, inst)});
    }
    write_table(config, "characterize_rt", rt);
    write_table(config, "characterize_delta_ic", dic);

    // per-device write failure rate at fixed junction bias, 0 -> 1 direction
    Table wer{{"T_K", "V_MTJ_V", "WER"}, {}};
    for (double t : config.grid.t_list) {
        for (double v = 0.30; v <= 0.80 + 1e-9; v += 0.01) {
            const double current = v / resistance(dev, 0, v, t, inst);
            wer.add({t, v,
                     switching_survival(dev, current, config.op.t_set, t,
                                        SwitchDirection::ap_to_p, inst)});
        }
    }
    write_table(config, "characterize_wer", wer);
}

void cmd_read(const RunConfig& config) {
    const ReadPopulations pops =
        read_populations(config.device, config.op, config.trials, config.rng());

    Table dist{{"combo", "trial", "V_G_V"}, {}};
    auto add_combo = [&](const char* name, const std::vector<double>& vg) {
        for (std::size_t t = 0; t < vg.size(); ++t)
            dist.add({name, static_cast<double>(t), vg[t]});
    };
    add_combo("00", pops.vg00);
    add_combo("01", pops.vg01);
    add_combo("10", pops.vg10);
    add_combo("11", pops.vg11);
    write_table(config, "read_distributions", dist);

    const auto [rm_nom, rm_3s] = read_margins(pops.sum00, pops.sum_neq);
    const BerReport ber =
        equal_ber_vref(pops.sum00, pops.sum_neq, config.op.delta_ref, pops.sum11);
    auto pop = [](const GaussianSummary& s) {
        return json{{"mu_V", s.mu}, {"sigma_V", s.sigma}, {"n", s.n}};
    };
    write_json_file(config, "read_summary.json",
                    json{{"population_00", pop(pops.sum00)},
                         {"population_neq", pop(pops.sum_neq)},
                         {"population_11", pop(pops.sum11)},
                         {"rm_nom_V", rm_nom},
                         {"rm_3sigma_V", rm_3s},
                         {"v_ref_V", ber.v_ref},
                         {"balanced_ber", ber.balanced_ber},
                         {"worst_ber_00", ber.worst_ber_00},
                         {"worst_ber_neq", ber.worst_ber_neq},
                         {"ber_11", ber.ber_11}});
}

void cmd_gate(const RunConfig& config) {
    const GateReport rep =
        gate_report_balanced(config.device, config.op, config.trials, config.rng());

    Table table{{"P", "Q", "RDR", "BER", "WER", "Error", "Energy_J"}, {}};
    for (const auto& row : rep.rows)
        table.add({std::to_string(row.combo.first), std::to_string(row.combo.second), row.rdr,
                   row.ber, row.wer, row.error, row.energy});
    table.add({"avg", "avg", "", "", "", rep.avg_error, rep.avg_energy});
    write_table(config, "gate_report", table);
}

void cmd_sweep(const RunConfig& config) {
    const auto read_points =
        sweep_read(config.device, config.op, config.grid, config.trials, config.rng());
    Table read_table{
        {"R_G_ohm", "V_READ_V", "RM_nom_V", "RM_3sigma_V", "V_REF_V", "avg_RDR", "avg_BER"}, {}};
    for (const auto& p : read_points)
        read_table.add(
            {p.r_g, p.v_read, p.rm_nom, p.rm_3sigma, p.v_ref, p.avg_rdr, p.avg_ber});
    write_table(config, "sweep_read", read_table);

    Table vset_table{{"R_G_ohm", "V_SET_V"}, {}};
    for (double r_g : config.grid.r_g_list)
        vset_table.add(
            {r_g, vset_for_target_wer(config.device, config.op, r_g, config.op.temperature,
                                      1e-7)});
    write_table(config, "vset_targets", vset_table);

    const auto full_points =
        sweep_full(config.device, config.op, config.grid, config.trials, config.rng());
    Table full_table{{"R_G_ohm", "V_READ_V", "V_SET_V", "WER_00", "avg_error", "avg_energy_J"},
                     {}};
    for (const auto& p : full_points)
        full_table.add({p.r_g, p.v_read, p.v_set, p.wer_00, p.avg_error, p.avg_energy});
    write_table(config, "sweep_full", full_table);
}

void cmd_temperature(const RunConfig& config) {
    const auto records = temperature_analysis(config.device, config.op, config.grid.t_list,
                                              config.trials, config.rng());
    Table table{{"T_K", "avg_RDR", "WER_00", "RM_nom_V", "RM_3sigma_V", "V_REF_ptat_V",
                 "avg_error_const", "avg_error_ptat", "avg_energy_J"},
                {}};
    for (const auto& r : records)
        table.add({r.temperature, r.avg_rdr, r.wer_00, r.rm_nom, r.rm_3sigma, r.v_ref_ptat,
                   r.avg_error_const, r.avg_error_ptat, r.avg_energy});
    write_table(config, "temperature", table);
}

void cmd_calibrate(const RunConfig& config) {
    const CalibrationResult result =
        calibrate(config.device, CalibrationAnchors{}, config.trials, config.rng());
    const HeldoutReport heldout = validate_heldout(result.params, config.trials, config.rng());

    json heldout_json = json::array();
    for (const auto& e : heldout.entries)
        heldout_json.push_back(
            {{"name", e.name}, {"measured", e.measured}, {"target", e.target}, {"pass", e.pass}});
    write_json_file(config, "calibration.json",
                    json{{"constants",
                          {{"n_eff", result.params.n_eff},
                           {"k_ic", result.params.k_ic},
                           {"k_w", result.params.k_w},
                           {"c_tox", result.params.c_tox},
                           {"e_comp", result.params.e_comp}}},
                         {"residuals",
                          {{"rdr_ratio", result.residual_rdr_ratio},
                           {"wer_decades", result.residual_wer_decades},
                           {"rm_3sigma_V", result.residual_rm_3sigma}}},
                         {"outer_iterations", result.outer_iterations},
                         {"heldout", heldout_json}});

    // drop-in [device] block for configuration files
    std::string block = "[device]\n";
    block += "n_eff = " + fmt_double(result.params.n_eff) + "\n";
    block += "k_ic = " + fmt_double(result.params.k_ic) + "\n";
    block += "k_w = " + fmt_double(result.params.k_w) + "\n";
    block += "c_tox = " + fmt_double(result.params.c_tox) + "\n";
    block += "e_comp = " + fmt_double(result.params.e_comp) + "\n";
    ensure_dir(config.out_dir);
    write_text(config.out_dir / "calibrated_device.conf", block);
}

}  // namespace simply
