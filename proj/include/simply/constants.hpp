#pragma once

namespace simply {

// Physical constants used by the compact model (SI units).
// gamma is the gyromagnetic ratio and tau0 the thermal attempt time of the
// activated-switching law; both are model constants, not CODATA values.
struct PhysicalConstants {
    double mu0   = 1.25663706212e-6;  // vacuum permeability, T*m/A
    double kB    = 1.380649e-23;      // Boltzmann constant, J/K
    double e     = 1.602176634e-19;   // electron charge, C
    double gamma = 1.76e11;           // gyromagnetic ratio, rad/(s*T)
    double muB   = 9.2740100783e-24;  // Bohr magneton, J/T
    double tau0  = 1e-9;              // thermal attempt time, s
};

inline constexpr PhysicalConstants phys{};

}  // namespace simply
