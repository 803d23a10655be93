#include "rydbench/simd.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rydbench::simd {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

IsaLevel detect() {
    IsaLevel level = avx2_available() ? IsaLevel::avx2 : IsaLevel::scalar;
    if (const char* env = std::getenv("RYDBENCH_SIMD")) {
        const std::string want(env);
        if (want == "scalar")
            level = IsaLevel::scalar;
        else if (want == "avx2" && avx2_available())
            level = IsaLevel::avx2;
    }
    return level;
}

IsaLevel& level_ref() {
    static IsaLevel level = detect();
    return level;
}

} // namespace

IsaLevel active_level() { return level_ref(); }

void force_level(IsaLevel level) {
    if (level == IsaLevel::avx2 && !avx2_available())
        throw std::runtime_error("force_level: AVX2 not available on this host");
    level_ref() = level;
}

const char* level_name(IsaLevel level) {
    switch (level) {
    case IsaLevel::scalar: return "scalar";
    case IsaLevel::avx2: return "avx2";
    }
    return "unknown";
}

} // namespace rydbench::simd
