#pragma once

// Physical constants, CODATA 2018. All quantities SI.

namespace echokit::constants {

// Boltzmann constant, J/K (exact since the 2019 SI redefinition).
inline constexpr double k_boltzmann = 1.380649e-23;

// Bohr magneton, J/T. CODATA 2018: 9.27401008(3)e-24.
inline constexpr double mu_bohr = 9.27401008e-24;

}  // namespace echokit::constants
