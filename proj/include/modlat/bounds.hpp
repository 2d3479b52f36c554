#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace modlat {

// Desk-scale limits. Everything in this library is exact; these caps keep the
// exact solvers and enumerations tractable, and every consumer reports an
// explicit "skipped" (or throws BoundExceeded) instead of approximating.
inline constexpr unsigned kMaxFieldSize = 64;        // q = p^e
inline constexpr unsigned kMaxExtensionDegree = 4;   // e
inline constexpr unsigned kMaxAmbientDim = 6;        // vector-space dimension
inline constexpr uint64_t kMaxGroupOrder = 4096;     // explicit-model order
inline constexpr uint64_t kMaxSubspaceSpan = 4096;   // q^n for subspace enumeration
inline constexpr unsigned kMaxSolverVertices = 40;   // gamma / chi / omega
inline constexpr unsigned kMaxPlanarVertices = 60;   // planarity decision
inline constexpr unsigned kMaxQuotientSize = 64;     // Goursat coset tables

// MODLAT_MAX_ORDER may lower (never raise) the explicit-model order cap.
inline uint64_t max_group_order() {
    if (const char* env = std::getenv("MODLAT_MAX_ORDER")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0 && v < kMaxGroupOrder) return v;
    }
    return kMaxGroupOrder;
}

// Thrown when an input exceeds a desk-scale cap that has no "skipped" channel.
class BoundExceeded : public std::runtime_error {
public:
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace modlat
