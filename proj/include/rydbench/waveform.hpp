#pragma once

#include <utility>
#include <vector>

namespace rydbench {

struct WaveformPoint {
    double t_us = 0.0;
    double omega = 0.0;    // rad/us
    double delta = 0.0;    // rad/us
};

// Control schedule Omega(t), Delta(t), linear between breakpoints.
// Times must be strictly increasing and start at zero; Omega >= 0.
struct Waveform {
    std::vector<WaveformPoint> points;

    // Step interpolation instead of linear; ablation mode for layered
    // schedules, never produced by the standard builders.
    bool piecewise_constant = false;

    double t_total_us() const;
    double omega_at(double t_us) const;
    double delta_at(double t_us) const;
    std::pair<double, double> at(double t_us) const;

    // Throws if the breakpoint list violates the invariants above.
    void check() const;
};

} // namespace rydbench
