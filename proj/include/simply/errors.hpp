#pragma once

#include <stdexcept>
#include <string>

namespace simply {

// invalid model state (out-of-range temperature, easy-plane regime, ...)
struct model_error : std::runtime_error {
    explicit model_error(const std::string& what) : std::runtime_error(what) {}
};

// nonlinear solver failed to converge
struct solver_error : std::runtime_error {
    solver_error(const std::string& what, double last_residual)
        : std::runtime_error(what), residual(last_residual) {}
    double residual;
};

// bracket or target failure in a 1-D search
struct search_error : std::runtime_error {
    explicit search_error(const std::string& what) : std::runtime_error(what) {}
};

// calibration bracket failure; names the offending constant
struct calibration_error : std::runtime_error {
    calibration_error(const std::string& constant_name, const std::string& what)
        : std::runtime_error(what), constant(constant_name) {}
    std::string constant;
};

// bad configuration file or missing PTAT table entry
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// filesystem failure on output emission
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace simply
