#pragma once

namespace rydbench::simd {

enum class IsaLevel {
    scalar,
    avx2,
};

// True when this build carries AVX2 kernels and the CPU reports AVX2.
bool avx2_available();

// Level the dispatched kernels currently run at. Defaults to the best
// available lane; honors RYDBENCH_SIMD={scalar,avx2} from the environment.
IsaLevel active_level();

// Overrides the dispatch lane, mainly for equivalence tests.
// Throws if the requested lane is not available.
void force_level(IsaLevel level);

const char* level_name(IsaLevel level);

} // namespace rydbench::simd
