#include "rydbench/instance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "rydbench/rng.hpp"

namespace rydbench {

std::vector<std::pair<double, double>> DuggInstance::positions_um() const {
    std::vector<std::pair<double, double>> pos;
    pos.reserve(sites.size());
    for (const auto& site : sites)
        pos.emplace_back(site.col * spacing_um, site.row * spacing_um);
    return pos;
}

std::vector<std::pair<int, int>> edges_from_positions(
    const std::vector<std::pair<double, double>>& positions_um,
    double disk_radius_um) {
    const double radius = disk_radius_um * (1.0 + kUnitDiskRelTol);
    const double radius_sq = radius * radius;
    const int n = static_cast<int>(positions_um.size());

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dx = positions_um[i].first - positions_um[j].first;
            const double dy = positions_um[i].second - positions_um[j].second;
            const double dist_sq = dx * dx + dy * dy;
            if (dist_sq == 0.0)
                throw std::invalid_argument("edges_from_positions: duplicate positions");
            if (dist_sq <= radius_sq)
                edges.emplace_back(i, j);
        }
    }
    return edges;
}

DuggInstance generate_dugg(int rows, int cols, double occupation_prob,
                           double spacing_um, std::uint64_t seed) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("generate_dugg: grid must have at least one cell");
    if (occupation_prob < 0.0 || occupation_prob > 1.0)
        throw std::invalid_argument("generate_dugg: occupation_prob outside [0,1]");
    if (spacing_um <= 0.0)
        throw std::invalid_argument("generate_dugg: spacing must be positive");

    DuggInstance inst;
    inst.rows = rows;
    inst.cols = cols;
    inst.spacing_um = spacing_um;
    inst.occupation_prob = occupation_prob;
    inst.seed = seed;

    // One Bernoulli variate per cell in row-major order; this draw order is
    // part of the instance-file contract.
    Xoshiro256StarStar rng(seed);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng.next_double() < occupation_prob)
                inst.sites.push_back({r, c});

    if (inst.sites.empty())
        throw std::runtime_error("generate_dugg: empty instance (no occupied sites)");

    inst.edges = edges_from_positions(inst.positions_um(),
                                      std::sqrt(2.0) * spacing_um);

    char id[96];
    std::snprintf(id, sizeof(id), "dugg_%dx%d_p%g_s%llu", rows, cols,
                  occupation_prob, static_cast<unsigned long long>(seed));
    inst.id = id;
    return inst;
}

bool is_independent_mask(std::uint64_t mask,
                         const std::vector<std::pair<int, int>>& edges) {
    for (const auto& [i, j] : edges)
        if (((mask >> i) & 1ull) && ((mask >> j) & 1ull))
            return false;
    return true;
}

bool is_independent(const std::vector<std::uint8_t>& bits, const DuggInstance& inst) {
    for (const auto& [i, j] : inst.edges)
        if (bits[i] && bits[j])
            return false;
    return true;
}

std::vector<std::uint8_t> bits_from_mask(std::uint64_t mask, int n_qubits) {
    std::vector<std::uint8_t> bits(n_qubits);
    for (int i = 0; i < n_qubits; ++i)
        bits[i] = static_cast<std::uint8_t>((mask >> i) & 1ull);
    return bits;
}

std::uint64_t mask_from_bits(const std::vector<std::uint8_t>& bits) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i])
            mask |= 1ull << i;
    return mask;
}

namespace {

std::vector<std::uint64_t> adjacency_masks(const DuggInstance& inst) {
    std::vector<std::uint64_t> adj(inst.n_qubits(), 0);
    for (const auto& [i, j] : inst.edges) {
        adj[i] |= 1ull << j;
        adj[j] |= 1ull << i;
    }
    return adj;
}

// Branch and bound with max-degree pivoting; tracks only the best size.
class MisSizeSearch {
public:
    MisSizeSearch(int n, const std::vector<std::uint64_t>& adj)
        : n_(n), adj_(adj) {}

    int run(int initial_lower_bound) {
        best_ = initial_lower_bound;
        expand(0, (n_ == 64) ? ~0ull : ((1ull << n_) - 1));
        return best_;
    }

private:
    void expand(int chosen, std::uint64_t cand) {
        if (chosen + std::popcount(cand) <= best_)
            return;
        if (cand == 0) {
            best_ = chosen;
            return;
        }
        // Pivot on the candidate with most candidate neighbors; both its
        // inclusion and exclusion shrink the subproblem fastest.
        int pivot = -1, pivot_deg = -1;
        for (std::uint64_t rest = cand; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const int deg = std::popcount(adj_[v] & cand);
            if (deg > pivot_deg) {
                pivot_deg = deg;
                pivot = v;
            }
        }
        const std::uint64_t bit = 1ull << pivot;
        expand(chosen + 1, cand & ~adj_[pivot] & ~bit);
        expand(chosen, cand & ~bit);
    }

    int n_;
    const std::vector<std::uint64_t>& adj_;
    int best_ = 0;
};

// Depth-first in index order, exclusion branch first: the first optimum
// found is the lexicographically smallest bit vector of that size.
class LexSearch {
public:
    LexSearch(const std::vector<std::uint64_t>& adj, int target)
        : adj_(adj), target_(target) {}

    std::uint64_t run(std::uint64_t full_mask) {
        found_ = 0;
        descend(0, 0, full_mask);
        return found_;
    }

private:
    bool descend(std::uint64_t chosen, int size, std::uint64_t cand) {
        if (size == target_) {
            found_ = chosen;
            return true;
        }
        if (size + std::popcount(cand) < target_)
            return false;
        const int v = std::countr_zero(cand);
        const std::uint64_t bit = 1ull << v;
        if (descend(chosen, size, cand & ~bit))
            return true;
        return descend(chosen | bit, size + 1, cand & ~adj_[v] & ~bit);
    }

    const std::vector<std::uint64_t>& adj_;
    int target_;
    std::uint64_t found_ = 0;
};

void collect_optima(const std::vector<std::uint64_t>& adj, int target,
                    std::uint64_t chosen, int size, std::uint64_t cand,
                    std::vector<std::uint64_t>& out) {
    if (size == target) {
        out.push_back(chosen);
        return;
    }
    if (size + std::popcount(cand) < target)
        return;
    const int v = std::countr_zero(cand);
    const std::uint64_t bit = 1ull << v;
    collect_optima(adj, target, chosen, size, cand & ~bit, out);
    collect_optima(adj, target, chosen | bit, size + 1, cand & ~adj[v] & ~bit, out);
}

} // namespace

MisSolution solve_mis_greedy(const DuggInstance& inst) {
    const int n = inst.n_qubits();
    std::vector<std::vector<int>> neighbors(n);
    for (const auto& [i, j] : inst.edges) {
        neighbors[i].push_back(j);
        neighbors[j].push_back(i);
    }

    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v)
        degree[v] = static_cast<int>(neighbors[v].size());

    std::vector<std::uint8_t> removed(n, 0);
    MisSolution sol;
    sol.selected.assign(n, 0);

    int remaining = n;
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (removed[v])
                continue;
            if (pick < 0 || degree[v] < degree[pick])
                pick = v;
        }
        sol.selected[pick] = 1;
        ++sol.cost;
        removed[pick] = 1;
        --remaining;
        for (int u : neighbors[pick]) {
            if (removed[u])
                continue;
            removed[u] = 1;
            --remaining;
            for (int w : neighbors[u])
                if (!removed[w])
                    --degree[w];
        }
    }
    sol.is_valid = true;
    return sol;
}

MisSolution solve_mis_exact(const DuggInstance& inst, int cap) {
    const int n = inst.n_qubits();
    if (n > cap)
        throw std::runtime_error("solve_mis_exact: oracle cap exceeded (" +
                                 std::to_string(n) + " > " + std::to_string(cap) + ")");
    if (n > 63)
        throw std::runtime_error("solve_mis_exact: instance too large for mask solver");

    const auto adj = adjacency_masks(inst);
    const int greedy_cost = solve_mis_greedy(inst).cost;

    MisSizeSearch search(n, adj);
    const int best = search.run(greedy_cost - 1);

    LexSearch lex(adj, best);
    const std::uint64_t set = lex.run((n == 64) ? ~0ull : ((1ull << n) - 1));

    MisSolution sol;
    sol.selected = bits_from_mask(set, n);
    sol.cost = best;
    sol.is_valid = true;
    return sol;
}

std::vector<std::uint64_t> enumerate_optimal_sets(const DuggInstance& inst, int cap) {
    const int n = inst.n_qubits();
    if (n > cap)
        throw std::runtime_error("enumerate_optimal_sets: oracle cap exceeded");

    const auto adj = adjacency_masks(inst);
    const int best = solve_mis_exact(inst, cap).cost;

    std::vector<std::uint64_t> optima;
    collect_optima(adj, best, 0, 0, (n == 64) ? ~0ull : ((1ull << n) - 1), optima);
    std::sort(optima.begin(), optima.end());
    return optima;
}

} // namespace rydbench
