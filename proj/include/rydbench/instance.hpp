#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rydbench {

struct GridSite {
    int row = 0;
    int col = 0;

    friend bool operator==(const GridSite&, const GridSite&) = default;
};

// Diagonal-connected unit-disk grid graph: atoms occupy cells of a square
// lattice and edges join sites within sqrt(2) * spacing (horizontal,
// vertical, and diagonal neighbors).
struct DuggInstance {
    std::string id;
    int rows = 0;
    int cols = 0;
    double spacing_um = 0.0;
    double occupation_prob = 1.0;
    std::uint64_t seed = 0;
    std::vector<GridSite> sites;               // row-major generation order
    std::vector<std::pair<int, int>> edges;    // i < j, sorted
    std::optional<int> optimal_cost;

    int n_qubits() const { return static_cast<int>(sites.size()); }

    // Physical coordinates in micrometers: x = col * spacing, y = row * spacing.
    std::vector<std::pair<double, double>> positions_um() const;
};

struct MisSolution {
    std::vector<std::uint8_t> selected;    // one 0/1 entry per site
    int cost = 0;
    bool is_valid = false;
};

// Relative tolerance on the unit-disk radius, so diagonal neighbors at
// exactly sqrt(2)*a survive floating-point rounding.
inline constexpr double kUnitDiskRelTol = 1e-9;

// Largest instance the exact solver accepts by default.
inline constexpr int kDefaultOracleCap = 30;

// Edges between all position pairs within disk_radius_um * (1 + rel_tol).
// Throws on duplicate positions.
std::vector<std::pair<int, int>> edges_from_positions(
    const std::vector<std::pair<double, double>>& positions_um,
    double disk_radius_um);

// Occupies each grid cell independently with probability occupation_prob,
// drawing one variate per cell in row-major order from xoshiro256**(seed).
// Throws if no cell ends up occupied.
DuggInstance generate_dugg(int rows, int cols, double occupation_prob,
                           double spacing_um, std::uint64_t seed);

// Exact maximum independent set via branch and bound. Ties between optimal
// sets are broken toward the lexicographically smallest bit vector. Throws
// if n_qubits exceeds cap.
MisSolution solve_mis_exact(const DuggInstance& inst, int cap = kDefaultOracleCap);

// Minimum-degree greedy heuristic; always returns a valid independent set.
MisSolution solve_mis_greedy(const DuggInstance& inst);

// Every maximum independent set, encoded as basis masks (bit i set = site i
// selected), sorted ascending. Requires n_qubits <= cap.
std::vector<std::uint64_t> enumerate_optimal_sets(const DuggInstance& inst,
                                                  int cap = kDefaultOracleCap);

// True if no edge has both endpoints set in the mask.
bool is_independent_mask(std::uint64_t mask,
                         const std::vector<std::pair<int, int>>& edges);

bool is_independent(const std::vector<std::uint8_t>& bits, const DuggInstance& inst);

std::vector<std::uint8_t> bits_from_mask(std::uint64_t mask, int n_qubits);
std::uint64_t mask_from_bits(const std::vector<std::uint8_t>& bits);

} // namespace rydbench
