#pragma once

#include <string>

namespace rydbench {

// Hardware envelope of a neutral-atom machine. All frequencies are angular
// (rad/us), lengths in um, times in us; c6 is in rad/us * um^6.
struct DeviceSpec {
    std::string name;
    double c6 = 0.0;
    int max_atoms = 0;
    double a_min_um = 0.0;
    double t_max_us = 0.0;
    double omega_max = 0.0;
    double delta_abs_max = 0.0;
};

// Bundled specs: "pasqal_fresnel" and "quera_aquila". Throws on other names.
DeviceSpec builtin_device(const std::string& name);

// Lattice constant on the destination device that reproduces the source
// device's interaction strength: a_dst = a_src * (c6_dst / c6_src)^(1/6).
double calibrate_spacing(double c6_src, double a_src_um, double c6_dst);

} // namespace rydbench
