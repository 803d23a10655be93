#include "rydbench/device.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rydbench {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

DeviceSpec builtin_device(const std::string& name) {
    // C6 values are angular (rad/us * um^6); the per-device amplitude limits
    // are quoted by the vendors as ordinary MHz and converted here.
    if (name == "pasqal_fresnel") {
        return DeviceSpec{
            .name = "pasqal_fresnel",
            .c6 = 865723.0,
            .max_atoms = 100,
            .a_min_um = 5.0,
            .t_max_us = 6.0,
            .omega_max = 2.0 * two_pi,
            .delta_abs_max = 7.75 * two_pi,
        };
    }
    if (name == "quera_aquila") {
        return DeviceSpec{
            .name = "quera_aquila",
            .c6 = 5420441.0,
            .max_atoms = 256,
            .a_min_um = 4.0,
            .t_max_us = 4.0,
            .omega_max = 2.5 * two_pi,
            .delta_abs_max = 20.0 * two_pi,
        };
    }
    throw std::invalid_argument("unknown device: " + name);
}

double calibrate_spacing(double c6_src, double a_src_um, double c6_dst) {
    if (c6_src <= 0.0 || a_src_um <= 0.0 || c6_dst <= 0.0)
        throw std::invalid_argument("calibrate_spacing: inputs must be positive");
    return a_src_um * std::pow(c6_dst / c6_src, 1.0 / 6.0);
}

} // namespace rydbench
