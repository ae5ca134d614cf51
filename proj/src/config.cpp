#include "simply/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace simply {

void RunConfig::validate() const {
    try {
        device.validate();
        op.validate();
    } catch (const model_error& e) {
        throw config_error(std::string("config: ") + e.what());
    }
    grid.validate();
    if (trials < 2) throw config_error("config: trials must be at least 2");
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, const std::string& key) {
    std::size_t pos = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw config_error("config: invalid number for key '" + key + "': " + value);
    }
    if (pos != value.size())
        throw config_error("config: trailing characters for key '" + key + "': " + value);
    return out;
}

std::vector<double> parse_list(const std::string& value, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(trim(item), key));
    if (out.empty()) throw config_error("config: empty list for key '" + key + "'");
    return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    RunConfig cfg;

    using Setter = std::function<void(const std::string&, const std::string&)>;
    auto num = [](double& field) {
        return Setter([&field](const std::string& k, const std::string& v) {
            field = parse_double(v, k);
        });
    };
    auto list = [](std::vector<double>& field) {
        return Setter([&field](const std::string& k, const std::string& v) {
            field = parse_list(v, k);
        });
    };

    const std::map<std::string, std::map<std::string, Setter>> schema{
        {"device",
         {{"diameter", num(cfg.device.diameter)},
          {"t_fl", num(cfg.device.free_layer_thickness)},
          {"t_ox", num(cfg.device.oxide_thickness)},
          {"ra", num(cfg.device.resistance_area)},
          {"v_h", num(cfg.device.half_tmr_bias)},
          {"alpha", num(cfg.device.damping)},
          {"sigma_tox_rel", num(cfg.device.sigma_tox_rel)},
          {"sigma_area_rel", num(cfg.device.sigma_area_rel)},
          {"n_eff", num(cfg.device.n_eff)},
          {"k_ic", num(cfg.device.k_ic)},
          {"k_w", num(cfg.device.k_w)},
          {"c_tox", num(cfg.device.c_tox)},
          {"e_comp", num(cfg.device.e_comp)}}},
        {"operating",
         {{"temperature", num(cfg.op.temperature)},
          {"r_g", num(cfg.op.r_g)},
          {"v_read", num(cfg.op.v_read)},
          {"t_read", num(cfg.op.t_read)},
          {"v_set", num(cfg.op.v_set)},
          {"t_set", num(cfg.op.t_set)},
          {"v_reset", num(cfg.op.v_reset)},
          {"t_reset", num(cfg.op.t_reset)},
          {"delta_ref", num(cfg.op.delta_ref)}}},
        {"campaign",
         {{"trials",
           Setter([&cfg](const std::string& k, const std::string& v) {
               const double d = parse_double(v, k);
               if (d < 0 || d != static_cast<double>(static_cast<std::size_t>(d)))
                   throw config_error("config: trials must be a non-negative integer");
               cfg.trials = static_cast<std::size_t>(d);
           })},
          {"seed", Setter([&cfg](const std::string& k, const std::string& v) {
               try {
                   cfg.master_seed = std::stoull(v);
               } catch (const std::exception&) {
                   throw config_error("config: invalid integer for key '" + k + "': " + v);
               }
           })}}},
        {"sweep",
         {{"r_g_list", list(cfg.grid.r_g_list)},
          {"v_read_min", num(cfg.grid.v_read_min)},
          {"v_read_max", num(cfg.grid.v_read_max)},
          {"v_read_step", num(cfg.grid.v_read_step)},
          {"v_set_min", num(cfg.grid.v_set_min)},
          {"v_set_max", num(cfg.grid.v_set_max)},
          {"v_set_step", num(cfg.grid.v_set_step)},
          {"t_list", list(cfg.grid.t_list)}}},
        {"output",
         {{"dir",
           Setter([&cfg](const std::string&, const std::string& v) { cfg.out_dir = v; })},
          {"format", Setter([&cfg](const std::string& k, const std::string& v) {
               if (v == "csv")
                   cfg.format = OutputFormat::csv;
               else if (v == "json")
                   cfg.format = OutputFormat::json;
               else
                   throw config_error("config: key '" + k + "' must be csv or json");
           })}}},
    };

    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::string where = origin + ":" + std::to_string(line_no);
        if (line.front() == '[') {
            if (line.back() != ']')
                throw config_error("config: malformed section header at " + where);
            section = trim(line.substr(1, line.size() - 2));
            if (!schema.count(section))
                throw config_error("config: unknown section '" + section + "' at " + where);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config: expected 'key = value' at " + where);
        if (section.empty())
            throw config_error("config: key outside any section at " + where);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto& keys = schema.at(section);
        const auto it = keys.find(key);
        if (it == keys.end())
            throw config_error("config: unknown key '" + key + "' in section [" + section +
                               "] at " + where);
        it->second(key, value);
    }

    cfg.validate();
    return cfg;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw config_error("config: cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path.string());
}

}  // namespace simply
