#pragma once

#include <string>
#include <vector>

#include "rydbench/device.hpp"
#include "rydbench/waveform.hpp"

namespace rydbench {

// Three-stage annealing schedule: ramp Omega up over t_rise at constant
// Delta = delta_in, sweep Delta linearly to delta_fin over t_sweep at
// constant Omega, then ramp Omega down over t_fall.
struct QaaParams {
    double omega_max = 5.5;     // rad/us
    double delta_in = -5.5;     // rad/us, < 0
    double delta_fin = 5.5;     // rad/us, > 0
    double t_rise = 0.5;        // us
    double t_sweep = 3.0;       // us
    double t_fall = 0.5;        // us

    double t_tot_us() const { return t_rise + t_sweep + t_fall; }
};

// The 1:6:1 rise/sweep/fall split at the standard 5.5 rad/us amplitudes.
QaaParams default_qaa(double t_tot_us);

// Layered analog schedule: p equal time segments, segment k carrying node
// values (omegas[k], deltas[k]) interpolated through segment midpoints.
struct QaoaParams {
    std::vector<double> omegas;    // >= 0, one per layer
    std::vector<double> deltas;    // one per layer
    double t_tot_us = 2.0;

    int p() const { return static_cast<int>(omegas.size()); }
};

Waveform build_qaa_schedule(const QaaParams& params);

// piecewise_constant switches to the step-function ablation; the default
// linear form clamps Omega(0) = Omega(t_tot) = 0.
Waveform build_qaoa_schedule(const QaoaParams& params,
                             bool piecewise_constant = false);

// Samples a QAA schedule at the p segment midpoints; the standard starting
// point for schedule training.
QaoaParams discretize_qaa(const QaaParams& params, int p);

struct ScheduleViolation {
    enum class Kind { omega_max, delta_abs_max, duration };

    Kind kind = Kind::omega_max;
    double value = 0.0;
    double limit = 0.0;
    double t_us = 0.0;

    std::string describe() const;
};

// Empty result means the waveform is realizable on the device.
std::vector<ScheduleViolation> validate_schedule(const Waveform& waveform,
                                                 const DeviceSpec& device);

} // namespace rydbench
