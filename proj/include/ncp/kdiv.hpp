#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncp/nc.hpp"
#include "ncp/poset.hpp"

namespace ncp {

/// pi_1 <= ... <= pi_k <= gamma in absolute order.
struct MultiChain {
  std::vector<GroupElement> entries;
};

/// (delta_1, ..., delta_k) with additive partial-product lengths.
struct DeltaSequence {
  std::vector<GroupElement> entries;
};

/// Which sequences count as elements of NC_(k)(W). Resolved: every partial
/// product delta_1...delta_i lies in NC(W). Literal: each delta_i lies in
/// NC(W) and the lengths add, with no condition on the products.
enum class DeltaReading { Resolved, Literal };

inline constexpr std::size_t kDefaultElementCap = 250'000;

struct KdivOptions {
  std::size_t max_elements = kDefaultElementCap;
  DeltaReading reading = DeltaReading::Resolved;
};

/// Entries stored as indices into an NCLattice.
using IndexTuple = std::vector<std::uint32_t>;

/// NC^(k)(W): k-multichains of NC(W) ordered by pi <= pi' iff
/// pi'_i^{-1} pi'_{i+1} <= pi_i^{-1} pi_{i+1} for all i, with pi_{k+1} = gamma.
class NcUpper {
 public:
  static std::shared_ptr<const NcUpper> build(std::shared_ptr<const NCLattice> nc, int k, KdivOptions options = {});

  const NCLattice& nc() const noexcept { return *nc_; }
  const std::shared_ptr<const NCLattice>& nc_ptr() const noexcept { return nc_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return chains_.size(); }
  const FinitePoset& poset() const noexcept { return poset_; }
  /// NC indices of pi_1..pi_k.
  const IndexTuple& chain(std::size_t i) const { return chains_[i]; }
  MultiChain element(std::size_t i) const;
  /// NC indices of pi_i^{-1} pi_{i+1}, i = 1..k.
  IndexTuple deltas(std::size_t i) const;
  std::optional<std::size_t> index_of(const IndexTuple& chain) const;

 private:
  NcUpper() = default;
  std::shared_ptr<const NCLattice> nc_;
  int k_ = 1;
  std::vector<IndexTuple> chains_;
  std::map<IndexTuple, std::size_t> index_;
  FinitePoset poset_;
};

/// NC_(k)(W): delta sequences ordered componentwise in absolute order.
class NcLower {
 public:
  static std::shared_ptr<const NcLower> build(std::shared_ptr<const NCLattice> nc, int k, KdivOptions options = {});

  const NCLattice& nc() const noexcept { return *nc_; }
  const std::shared_ptr<const NCLattice>& nc_ptr() const noexcept { return nc_; }
  int k() const noexcept { return k_; }
  DeltaReading reading() const noexcept { return reading_; }
  std::size_t size() const noexcept { return seqs_.size(); }
  const FinitePoset& poset() const noexcept { return poset_; }
  /// NC indices of delta_1..delta_k.
  const IndexTuple& deltas(std::size_t i) const { return seqs_[i]; }
  DeltaSequence element(std::size_t i) const;
  std::optional<std::size_t> index_of(const IndexTuple& deltas) const;
  /// Sum of the absolute lengths.
  int grade(std::size_t i) const;

 private:
  NcLower() = default;
  std::shared_ptr<const NCLattice> nc_;
  int k_ = 1;
  DeltaReading reading_ = DeltaReading::Resolved;
  std::vector<IndexTuple> seqs_;
  std::map<IndexTuple, std::size_t> index_;
  FinitePoset poset_;
};

std::shared_ptr<const NcUpper> build_nc_upper(std::shared_ptr<const NCLattice> nc, int k, KdivOptions options = {});
std::shared_ptr<const NcLower> build_nc_lower(std::shared_ptr<const NCLattice> nc, int k, KdivOptions options = {});

/// Quotient: delta_i = pi_i^{-1} pi_{i+1}. Reversed: the same tuple read
/// backwards.
enum class DualityVariant { Quotient, Reversed };

std::string_view to_string(DualityVariant v) noexcept;

/// Image of upper element i in `lower`.
std::size_t duality_map(const NcUpper& upper, const NcLower& lower, std::size_t i,
                        DualityVariant variant = DualityVariant::Quotient);
/// Inverse of duality_map: pi_1 = gamma (delta_1...delta_k)^{-1}, pi_{i+1} = pi_i delta_i.
std::size_t duality_inverse(const NcUpper& upper, const NcLower& lower, std::size_t j,
                            DualityVariant variant = DualityVariant::Quotient);

struct DualityCheck {
  bool bijective = false;
  bool order_reversing = false;
  bool ok() const noexcept { return bijective && order_reversing; }
};

/// Exhaustive check that the variant is an order-reversing bijection.
DualityCheck check_duality(const NcUpper& upper, const NcLower& lower, DualityVariant variant);
/// First variant passing check_duality; nullopt if none does.
std::optional<DualityVariant> select_duality(const NcUpper& upper, const NcLower& lower);

/// True iff the elements form a down-closed subset of NC(W)^k and the order
/// is the one induced from the product.
bool is_product_order_ideal(const NcLower& lower);

/// NC^(k)(W) minus its minimal elements, with 0hat adjoined at the last index.
FinitePoset theorem_poset_upper(const NcUpper& upper);
/// NC_(k)(W) minus its maximal elements, with 1hat adjoined at the last index.
FinitePoset theorem_poset_lower(const NcLower& lower);

/// All (delta_1, ..., delta_k) in NC(W)^k with additive lengths summing to n
/// and product gamma, enumerated directly (not read off NC_(k)).
std::vector<IndexTuple> maximal_factorizations(const NCLattice& nc, int k, std::size_t max_elements = kDefaultElementCap);

std::string render_tuple(const NCLattice& nc, const IndexTuple& t);
nlohmann::json delta_sequences_to_json(const NcLower& lower);

}  // namespace ncp
