#pragma once

#include <cstdint>
#include <vector>

#include "indel/codes.hpp"

namespace indel::detail {

// Pick as many vertices as possible with at most one from each clique.
// Every vertex must belong to at least one clique; two vertices conflict
// exactly when some clique holds both.
struct PackingInstance {
  std::size_t vertices = 0;
  std::vector<std::vector<std::uint32_t>> cliques;  // ascending members
};

// Fractional clique cover: w >= 0 with sum of w over the cliques holding x at
// least 1 for every vertex x. Taken from an optimal dual of the packing LP when
// the dense tableau fits, otherwise built greedily. `lp_value` receives the LP
// optimum, or the cover weight when the LP was skipped.
std::vector<double> clique_cover_weights(const PackingInstance& instance, double* lp_value);

struct PackingResult {
  std::vector<std::uint32_t> best;  // ascending
  bool complete = true;
  std::uint64_t nodes = 0;
};

// Exact maximum packing. `incumbent` must be a valid packing; only strictly
// larger ones replace it.
PackingResult max_packing(const PackingInstance& instance, const std::vector<double>& cover,
                          std::vector<std::uint32_t> incumbent, const ExactSearchLimits& limits);

}  // namespace indel::detail
