#pragma once

#include <filesystem>
#include <string>

#include "simply/explorer.hpp"

namespace simply {

enum class OutputFormat { csv, json };

struct RunConfig {
    DeviceParams device = DeviceParams::calibrated();
    OperatingPoint op{};
    std::size_t trials = 1000;
    std::uint64_t master_seed = 12345;
    SweepGrid grid{};
    std::filesystem::path out_dir = ".";
    OutputFormat format = OutputFormat::csv;

    RngSpec rng() const { return {master_seed}; }
    void validate() const;
};

// Line-oriented sectioned key = value file; unknown sections or keys are
// rejected. '#' starts a comment.
RunConfig parse_config_file(const std::filesystem::path& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin = "<string>");

}  // namespace simply
