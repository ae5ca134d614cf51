#pragma once

#include "simply/config.hpp"

namespace simply {

// Each command writes its result files into config.out_dir and is fully
// deterministic given (config, seed).
void cmd_characterize(const RunConfig& config);
void cmd_read(const RunConfig& config);
void cmd_gate(const RunConfig& config);
void cmd_sweep(const RunConfig& config);
void cmd_temperature(const RunConfig& config);
void cmd_calibrate(const RunConfig& config);

}  // namespace simply
