#include "rydbench/waveform.hpp"

#include <algorithm>
#include <stdexcept>

namespace rydbench {

double Waveform::t_total_us() const {
    return points.empty() ? 0.0 : points.back().t_us;
}

void Waveform::check() const {
    if (points.size() < 2)
        throw std::invalid_argument("waveform: need at least two breakpoints");
    if (points.front().t_us != 0.0)
        throw std::invalid_argument("waveform: first breakpoint must be at t = 0");
    for (std::size_t k = 1; k < points.size(); ++k)
        if (points[k].t_us <= points[k - 1].t_us)
            throw std::invalid_argument("waveform: breakpoint times must increase");
    for (const auto& pt : points)
        if (pt.omega < 0.0)
            throw std::invalid_argument("waveform: omega must be non-negative");
}

std::pair<double, double> Waveform::at(double t_us) const {
    if (points.empty())
        return {0.0, 0.0};
    if (t_us <= points.front().t_us)
        return {points.front().omega, points.front().delta};
    if (t_us >= points.back().t_us)
        return {points.back().omega, points.back().delta};

    const auto upper = std::upper_bound(
        points.begin(), points.end(), t_us,
        [](double t, const WaveformPoint& pt) { return t < pt.t_us; });
    const auto& hi = *upper;
    const auto& lo = *(upper - 1);

    if (piecewise_constant)
        return {lo.omega, lo.delta};

    const double u = (t_us - lo.t_us) / (hi.t_us - lo.t_us);
    return {lo.omega + u * (hi.omega - lo.omega),
            lo.delta + u * (hi.delta - lo.delta)};
}

double Waveform::omega_at(double t_us) const { return at(t_us).first; }
double Waveform::delta_at(double t_us) const { return at(t_us).second; }

} // namespace rydbench
