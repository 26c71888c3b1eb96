#pragma once

// CODATA 2018 values.
namespace levicool::constants {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double c = 299792458.0;            // m/s
inline constexpr double eps0 = 8.8541878128e-12;    // F/m
inline constexpr double k_B = 1.380649e-23;         // J/K

}  // namespace levicool::constants
