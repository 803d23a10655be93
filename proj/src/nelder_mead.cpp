#include "rydbench/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rydbench {

namespace {

struct Vertex {
    std::vector<double> x;
    double f = 0.0;
};

[[noreturn]] void throw_non_finite(const std::vector<double>& x) {
    std::ostringstream msg;
    msg << "nelder_mead: objective returned non-finite value at x = [";
    for (std::size_t i = 0; i < x.size(); ++i)
        msg << (i ? ", " : "") << x[i];
    msg << "]";
    throw std::runtime_error(msg.str());
}

} // namespace

OptResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                      const std::vector<double>& x0, const OptimizerConfig& config) {
    const std::size_t d = x0.size();
    if (d == 0)
        throw std::invalid_argument("nelder_mead: empty starting point");
    if (!(config.reflection > 0.0) || !(config.expansion > 1.0) ||
        !(config.contraction > 0.0 && config.contraction < 1.0) ||
        !(config.shrink > 0.0 && config.shrink < 1.0))
        throw std::invalid_argument("nelder_mead: coefficient outside its domain");

    int evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        const double f = objective(x);
        ++evals;
        if (!std::isfinite(f))
            throw_non_finite(x);
        return f;
    };

    // MATLAB-style initial simplex: 5% displacement per coordinate, absolute
    // step for coordinates at zero.
    std::vector<Vertex> simplex(d + 1);
    simplex[0] = {x0, eval(x0)};
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<double> x = x0;
        x[i] += (x[i] != 0.0) ? 0.05 * std::abs(x[i]) : 0.00025;
        simplex[i + 1] = {std::move(x), 0.0};
        simplex[i + 1].f = eval(simplex[i + 1].x);
    }

    auto order = [&] {
        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    };
    order();

    auto spread = [&] {
        double sx = 0.0, sf = 0.0;
        for (std::size_t i = 1; i <= d; ++i) {
            sf = std::max(sf, std::abs(simplex[i].f - simplex[0].f));
            for (std::size_t j = 0; j < d; ++j)
                sx = std::max(sx, std::abs(simplex[i].x[j] - simplex[0].x[j]));
        }
        return std::max(sx, sf);
    };

    bool hit_max = false;
    while (true) {
        if (spread() < config.simplex_spread_tol)
            break;
        if (evals >= config.max_evals) {
            hit_max = true;
            break;
        }

        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                centroid[j] += simplex[i].x[j] / static_cast<double>(d);

        const Vertex& worst = simplex[d];
        auto blend = [&](double coeff) {
            std::vector<double> x(d);
            for (std::size_t j = 0; j < d; ++j)
                x[j] = centroid[j] + coeff * (centroid[j] - worst.x[j]);
            return x;
        };

        auto reflected = blend(config.reflection);
        const double fr = eval(reflected);

        if (fr < simplex[0].f) {
            auto expanded = blend(config.reflection * config.expansion);
            const double fe = eval(expanded);
            if (fe < fr)
                simplex[d] = {std::move(expanded), fe};
            else
                simplex[d] = {std::move(reflected), fr};
        } else if (fr < simplex[d - 1].f) {
            simplex[d] = {std::move(reflected), fr};
        } else {
            bool shrink = false;
            if (fr < worst.f) {
                auto outside = blend(config.reflection * config.contraction);
                const double fc = eval(outside);
                if (fc <= fr)
                    simplex[d] = {std::move(outside), fc};
                else
                    shrink = true;
            } else {
                auto inside = blend(-config.contraction);
                const double fc = eval(inside);
                if (fc < worst.f)
                    simplex[d] = {std::move(inside), fc};
                else
                    shrink = true;
            }
            if (shrink) {
                for (std::size_t i = 1; i <= d; ++i) {
                    for (std::size_t j = 0; j < d; ++j)
                        simplex[i].x[j] = simplex[0].x[j] +
                                          config.shrink * (simplex[i].x[j] - simplex[0].x[j]);
                    simplex[i].f = eval(simplex[i].x);
                }
            }
        }
        order();
    }

    return {simplex[0].x, simplex[0].f, evals, hit_max};
}

} // namespace rydbench
