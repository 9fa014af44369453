#pragma once

#include <cstdint>
#include <vector>

#include "parkideal/graph.hpp"

namespace parkideal {

/** Chip counts on the non-sink vertices 1..n; entries stay nonnegative. */
using Configuration = std::vector<long long>;

/** Which vertex sets are allowed to fire simultaneously. */
struct FiringModel {
    enum class Kind { Singletons, AllSubsets, Explicit };

    Kind kind = Kind::AllSubsets;
    std::vector<std::uint32_t> allowed;  // masks, only for Kind::Explicit

    static FiringModel singletons() { return {Kind::Singletons, {}}; }
    static FiringModel cluster() { return {Kind::AllSubsets, {}}; }
    static FiringModel explicit_family(const std::vector<std::vector<int>>& sets, int n);
};

/** True iff every member of sigma holds at least as many chips as it would send out. */
bool can_fire(const Graph& g, const Configuration& c, std::uint32_t sigma_mask);

/**
 * Fire sigma simultaneously: member i loses one chip per neighbor outside
 * sigma, outside vertex j gains one chip per member adjacent to it, chips
 * sent to the sink vanish. Throws InputError naming a deficient vertex if
 * the firing is invalid.
 */
Configuration fire_set(const Graph& g, const Configuration& c, const std::vector<int>& sigma);
Configuration fire_set(const Graph& g, const Configuration& c, std::uint32_t sigma_mask);

/** No allowed set can validly fire. */
bool is_stable(const Graph& g, const Configuration& c, const FiringModel& model);

struct FiringStep {
    std::vector<int> fired;
    Configuration result;
};

/**
 * Repeatedly fire the lexicographically least valid allowed set until
 * stable. Requires a connected graph (otherwise firing may never drain).
 */
Configuration stabilize(const Graph& g, Configuration c, const FiringModel& model);

/** Same policy, recording every step. */
std::vector<FiringStep> stabilize_trace(const Graph& g, Configuration c, const FiringModel& model);

/** Stabilize firing a uniformly random valid set each step (explicit seed). */
Configuration stabilize_random(const Graph& g, Configuration c, const FiringModel& model,
                               std::uint64_t seed);

}  // namespace parkideal
