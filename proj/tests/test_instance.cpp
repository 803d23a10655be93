#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "rydbench/instance.hpp"
#include "rydbench/rng.hpp"

using namespace rydbench;

namespace {

// Exhaustive 2^N reference: max independent set size and the
// lexicographically smallest optimal bit vector (bit 0 compared first).
struct BruteResult {
    int cost = 0;
    std::uint64_t best = 0;
};

bool lex_less(std::uint64_t a, std::uint64_t b, int n) {
    for (int i = 0; i < n; ++i) {
        const int ba = (a >> i) & 1, bb = (b >> i) & 1;
        if (ba != bb)
            return ba < bb;
    }
    return false;
}

BruteResult brute_force_mis(const DuggInstance& inst) {
    const int n = inst.n_qubits();
    BruteResult result;
    bool have = false;
    for (std::uint64_t z = 0; z < (1ull << n); ++z) {
        if (!is_independent_mask(z, inst.edges))
            continue;
        const int size = std::popcount(z);
        if (size > result.cost || (size == result.cost &&
                                   (!have || lex_less(z, result.best, n)))) {
            result.cost = size;
            result.best = z;
            have = true;
        }
    }
    return result;
}

// Independent edge derivation straight from the grid-offset rule.
std::vector<std::pair<int, int>> edges_by_offsets(const DuggInstance& inst) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < inst.n_qubits(); ++i) {
        for (int j = i + 1; j < inst.n_qubits(); ++j) {
            const int dr = std::abs(inst.sites[i].row - inst.sites[j].row);
            const int dc = std::abs(inst.sites[i].col - inst.sites[j].col);
            if (dr <= 1 && dc <= 1)
                edges.emplace_back(i, j);
        }
    }
    return edges;
}

} // namespace

TEST_CASE("splitmix64 known answers") {
    std::uint64_t state = 0;
    CHECK(splitmix64_next(state) == 0xE220A8397B1DCDAFull);
    CHECK(splitmix64_next(state) == 0x6E789E6AA1B965F4ull);
    CHECK(splitmix64(42) == 0xBDD732262FEB6E95ull);
}

TEST_CASE("xoshiro256** known answers") {
    Xoshiro256StarStar rng0(0);
    CHECK(rng0.next() == 0x99EC5F36CB75F2B4ull);
    CHECK(rng0.next() == 0xBF6E1F784956452Aull);
    CHECK(rng0.next() == 0x1A5F849D4933E6E0ull);
    CHECK(rng0.next() == 0x6AA594F1262D2D2Cull);

    Xoshiro256StarStar rng1(12345);
    CHECK(rng1.next() == 0xBE6A36374160D49Bull);
    CHECK(rng1.next() == 0x214AAA0637A688C6ull);

    Xoshiro256StarStar rng2(42);
    for (int k = 0; k < 1000; ++k) {
        const double u = rng2.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("full grids have the forced site and edge counts") {
    const auto grid3 = generate_dugg(3, 3, 1.0, 5.0, 7);
    CHECK(grid3.n_qubits() == 9);
    CHECK(grid3.edges.size() == 20);

    const auto pair = generate_dugg(1, 2, 1.0, 5.0, 7);
    CHECK(pair.n_qubits() == 2);
    CHECK(pair.edges.size() == 1);
}

TEST_CASE("edges_from_positions radius rule") {
    const double a = 5.0;
    const double radius = std::sqrt(2.0) * a;

    CHECK(edges_from_positions({{0, 0}, {a, 0}}, radius).size() == 1);
    CHECK(edges_from_positions({{0, 0}, {2 * a, 0}}, radius).empty());
    CHECK(edges_from_positions({{0, 0}, {a, a}}, radius).size() == 1);

    std::vector<std::pair<double, double>> grid;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            grid.emplace_back(c * a, r * a);
    CHECK(edges_from_positions(grid, radius).size() == 20);

    CHECK_THROWS(edges_from_positions({{0, 0}, {0, 0}}, radius));
}

TEST_CASE("generated edges match the grid-offset rule and re-derivation") {
    for (std::uint64_t seed : {42ull, 1ull, 999ull, 31337ull}) {
        const auto inst = generate_dugg(4, 4, 0.7, 5.0, seed);
        CHECK(inst.edges == edges_by_offsets(inst));
        CHECK(inst.edges == edges_from_positions(inst.positions_um(),
                                                 std::sqrt(2.0) * inst.spacing_um));
    }
}

TEST_CASE("generation is reproducible and respects the occupancy bounds") {
    const auto a = generate_dugg(5, 7, 0.6, 5.0, 123);
    const auto b = generate_dugg(5, 7, 0.6, 5.0, 123);
    CHECK(a.sites == b.sites);
    CHECK(a.edges == b.edges);
    CHECK(a.id == b.id);

    for (const auto& site : a.sites) {
        CHECK(site.row >= 0);
        CHECK(site.row < 5);
        CHECK(site.col >= 0);
        CHECK(site.col < 7);
    }
    const auto distinct = [&] {
        auto sites = a.sites;
        std::sort(sites.begin(), sites.end(), [](auto l, auto r) {
            return std::pair(l.row, l.col) < std::pair(r.row, r.col);
        });
        return std::adjacent_find(sites.begin(), sites.end()) == sites.end();
    }();
    CHECK(distinct);

    CHECK_THROWS_AS(generate_dugg(3, 3, 0.0, 5.0, 1), std::runtime_error);
    CHECK_THROWS(generate_dugg(0, 3, 1.0, 5.0, 1));
    CHECK_THROWS(generate_dugg(3, 3, 1.5, 5.0, 1));
}

TEST_CASE("exact solver on forced instances") {
    const auto path3 = generate_dugg(1, 3, 1.0, 5.0, 1);
    const auto sol3 = solve_mis_exact(path3);
    CHECK(sol3.cost == 2);
    CHECK(sol3.is_valid);
    CHECK(sol3.selected == std::vector<std::uint8_t>{1, 0, 1});

    const auto grid3 = generate_dugg(3, 3, 1.0, 5.0, 1);
    const auto sol9 = solve_mis_exact(grid3);
    CHECK(sol9.cost == 4);
    // Row-major 3x3: the corners are sites 0, 2, 6, 8.
    CHECK(sol9.selected ==
          std::vector<std::uint8_t>{1, 0, 1, 0, 0, 0, 1, 0, 1});

    DuggInstance no_edges;
    no_edges.rows = 1;
    no_edges.cols = 9;
    no_edges.spacing_um = 5.0;
    for (int c = 0; c < 9; c += 2)
        no_edges.sites.push_back({0, c});
    CHECK(no_edges.edges.empty());
    CHECK(solve_mis_exact(no_edges).cost == 5);
    CHECK(solve_mis_greedy(no_edges).cost == 5);
}

TEST_CASE("oracle cap is enforced") {
    const auto big = generate_dugg(6, 6, 1.0, 5.0, 1);
    CHECK_THROWS_AS(solve_mis_exact(big, 30), std::runtime_error);
    CHECK_NOTHROW(solve_mis_greedy(big));
}

TEST_CASE("branch and bound equals exhaustive enumeration") {
    int checked = 0;
    std::uint64_t seed = 2400;
    while (checked < 40) {
        DuggInstance inst;
        try {
            inst = generate_dugg(4, 4, 0.65, 5.0, seed);
        } catch (const std::runtime_error&) {
            seed = splitmix64(seed);
            continue;
        }
        seed = splitmix64(seed);
        if (inst.n_qubits() > 16)
            continue;
        ++checked;

        const auto brute = brute_force_mis(inst);
        const auto sol = solve_mis_exact(inst);
        CHECK(sol.cost == brute.cost);
        CHECK(mask_from_bits(sol.selected) == brute.best);
        CHECK(sol.is_valid);
        CHECK(is_independent(sol.selected, inst));

        const auto greedy = solve_mis_greedy(inst);
        CHECK(greedy.is_valid);
        CHECK(is_independent(greedy.selected, inst));
        CHECK(greedy.cost <= sol.cost);
        CHECK(greedy.cost == std::popcount(mask_from_bits(greedy.selected)));
    }
}

TEST_CASE("enumerate_optimal_sets finds every optimum") {
    const auto grid3 = generate_dugg(3, 3, 1.0, 5.0, 1);
    const auto optima = enumerate_optimal_sets(grid3);
    REQUIRE(optima.size() == 1);
    CHECK(optima[0] == 0b101000101ull);

    // Cross-check against enumeration on random instances.
    std::uint64_t seed = 555;
    for (int k = 0; k < 10; ++k, seed = splitmix64(seed)) {
        DuggInstance inst;
        try {
            inst = generate_dugg(3, 4, 0.8, 5.0, seed);
        } catch (const std::runtime_error&) {
            continue;
        }
        const int best = brute_force_mis(inst).cost;
        std::vector<std::uint64_t> expected;
        for (std::uint64_t z = 0; z < (1ull << inst.n_qubits()); ++z)
            if (std::popcount(z) == best && is_independent_mask(z, inst.edges))
                expected.push_back(z);
        CHECK(enumerate_optimal_sets(inst) == expected);
    }
}

TEST_CASE("mask helpers round-trip") {
    const std::vector<std::uint8_t> bits{1, 0, 0, 1, 1, 0};
    CHECK(bits_from_mask(mask_from_bits(bits), 6) == bits);
    CHECK(mask_from_bits(bits) == 0b011001ull);
}
