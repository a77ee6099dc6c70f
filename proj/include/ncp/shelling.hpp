#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "ncp/kdiv.hpp"
#include "ncp/labeling.hpp"
#include "ncp/nc.hpp"
#include "ncp/poset.hpp"

namespace ncp {

/// Name of the label on covers into 1hat.
inline constexpr const char* kThetaLabel = "θ";

/// NC_(k)(W) with 1hat adjoined at index lower.size().
FinitePoset with_top(const NcLower& lower);

/// Position of t_{block, p} in the lex order on T^k + theta; block is 1-based,
/// p is the 0-based position in the base order. Theta sits at N.
int lex_abw_position(int block, int p, int num_reflections);

/// Labels a cover of NC_(k)(W) changing delta_i by the reflection t with
/// t_{i, position of t}; covers into 1hat get theta. `top_poset` must be
/// with_top(lower). MalformedCover for a cover that does not change exactly
/// one coordinate by a reflection.
EdgeLabeling lex_abw_labeling(const NcLower& lower, const FinitePoset& top_poset, const ReflectionOrder& base_order);

/// F(w): number of weakly decreasing maximal chains of [e, w] in NC(W) under
/// the natural labeling, for every w.
std::vector<std::uint64_t> falling_counts_from_bottom(const NCLattice& nc, const ReflectionOrder& order);

struct FallingCensus {
  std::uint64_t total = 0;
  std::size_t contributing_maximals = 0;  // maximal elements with delta_1 = e
  std::vector<std::uint64_t> per_block;   // index i-1: sum of F(delta_i) over contributing maximals
};

/// Falling chains of NC_(k)(W) + 1hat counted block by block: the chain ends
/// at a maximal element with delta_1 = e, and fills coordinates k, k-1, ..., 2
/// with falling chains of the base lattice.
FallingCensus falling_chain_decomposition_census(const NcLower& lower, const ReflectionOrder& base_order);
nlohmann::json to_json(const FallingCensus& c);

struct FirstBlockCheck {
  std::uint64_t chains = 0;      // falling maximal chains visited
  std::uint64_t violations = 0;  // those whose last element before 1hat has delta_1 != e
};

/// Walks every falling maximal chain of with_top(lower).
FirstBlockCheck check_falling_first_block(const NcLower& lower, const FinitePoset& top_poset,
                                          const EdgeLabeling& labeling);

/// Sum over factorizations gamma = delta_1...delta_j with additive lengths of
/// the product of mu(e, delta_i) in NC(W).
std::int64_t factorization_mobius_sum(const NCLattice& nc, int j, std::size_t max_elements = kDefaultElementCap);

/// Sum over maximal x of mu(0hat, x); NoMinimum without a unique minimum.
std::int64_t sum_mobius_to_maxs(const FinitePoset& p);

}  // namespace ncp
