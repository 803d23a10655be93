#include "rydbench/schedule.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rydbench {

QaaParams default_qaa(double t_tot_us) {
    if (t_tot_us <= 0.0)
        throw std::invalid_argument("default_qaa: total time must be positive");
    // 1:2:1 split. Slow drive ramps matter as much as the sweep itself here:
    // the closing ramp anneals residual blockade violations away, and pushing
    // its share below ~1/4 of the budget measurably degrades both the valid
    // fraction and the approximation ratio at desk-scale sizes.
    QaaParams params;
    params.t_rise = t_tot_us / 4.0;
    params.t_fall = t_tot_us / 4.0;
    params.t_sweep = t_tot_us / 2.0;
    return params;
}

Waveform build_qaa_schedule(const QaaParams& params) {
    if (!(params.delta_in < 0.0) || !(params.delta_fin > 0.0))
        throw std::invalid_argument("qaa schedule: requires delta_in < 0 < delta_fin");
    if (params.t_rise <= 0.0 || params.t_sweep <= 0.0 || params.t_fall <= 0.0)
        throw std::invalid_argument("qaa schedule: stage durations must be positive");
    if (params.omega_max < 0.0)
        throw std::invalid_argument("qaa schedule: omega_max must be non-negative");

    Waveform wf;
    wf.points = {
        {0.0, 0.0, params.delta_in},
        {params.t_rise, params.omega_max, params.delta_in},
        {params.t_rise + params.t_sweep, params.omega_max, params.delta_fin},
        {params.t_tot_us(), 0.0, params.delta_fin},
    };
    wf.check();
    return wf;
}

Waveform build_qaoa_schedule(const QaoaParams& params, bool piecewise_constant) {
    const int p = params.p();
    if (p < 1)
        throw std::invalid_argument("qaoa schedule: need at least one layer");
    if (params.deltas.size() != params.omegas.size())
        throw std::invalid_argument("qaoa schedule: omegas/deltas length mismatch");
    if (params.t_tot_us <= 0.0)
        throw std::invalid_argument("qaoa schedule: total time must be positive");
    for (double w : params.omegas)
        if (w < 0.0)
            throw std::invalid_argument("qaoa schedule: omegas must be non-negative");

    const double segment = params.t_tot_us / p;
    Waveform wf;
    wf.piecewise_constant = piecewise_constant;

    if (piecewise_constant) {
        // Step interpolation holds each segment's node values; breakpoints
        // sit at segment starts.
        for (int k = 0; k < p; ++k)
            wf.points.push_back({k * segment, params.omegas[k], params.deltas[k]});
        wf.points.push_back(
            {params.t_tot_us, params.omegas[p - 1], params.deltas[p - 1]});
        return wf;
    }

    // Linear through the segment midpoints, with the drive clamped to zero
    // at both ends; the detuning extends its end values flat.
    wf.points.push_back({0.0, 0.0, params.deltas.front()});
    for (int k = 0; k < p; ++k)
        wf.points.push_back({(k + 0.5) * segment, params.omegas[k], params.deltas[k]});
    wf.points.push_back({params.t_tot_us, 0.0, params.deltas.back()});
    wf.check();
    return wf;
}

QaoaParams discretize_qaa(const QaaParams& params, int p) {
    if (p < 1)
        throw std::invalid_argument("discretize_qaa: need at least one node");
    const Waveform qaa = build_qaa_schedule(params);
    const double segment = params.t_tot_us() / p;

    QaoaParams out;
    out.t_tot_us = params.t_tot_us();
    out.omegas.reserve(p);
    out.deltas.reserve(p);
    for (int k = 0; k < p; ++k) {
        const auto [omega, delta] = qaa.at((k + 0.5) * segment);
        out.omegas.push_back(omega);
        out.deltas.push_back(delta);
    }
    return out;
}

std::string ScheduleViolation::describe() const {
    const char* what = "";
    switch (kind) {
    case Kind::omega_max: what = "omega above device limit"; break;
    case Kind::delta_abs_max: what = "|delta| above device limit"; break;
    case Kind::duration: what = "schedule longer than device allows"; break;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s: %.6g vs limit %.6g at t = %.6g us",
                  what, value, limit, t_us);
    return buf;
}

std::vector<ScheduleViolation> validate_schedule(const Waveform& waveform,
                                                 const DeviceSpec& device) {
    // Piecewise-linear in both channels, so extrema sit on breakpoints.
    std::vector<ScheduleViolation> violations;
    const double tol = 1e-9;
    for (const auto& pt : waveform.points) {
        if (pt.omega > device.omega_max * (1.0 + tol))
            violations.push_back({ScheduleViolation::Kind::omega_max, pt.omega,
                                  device.omega_max, pt.t_us});
        if (std::abs(pt.delta) > device.delta_abs_max * (1.0 + tol))
            violations.push_back({ScheduleViolation::Kind::delta_abs_max, pt.delta,
                                  device.delta_abs_max, pt.t_us});
    }
    if (waveform.t_total_us() > device.t_max_us * (1.0 + tol))
        violations.push_back({ScheduleViolation::Kind::duration,
                              waveform.t_total_us(), device.t_max_us,
                              waveform.t_total_us()});
    return violations;
}

} // namespace rydbench
