#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncp/coxeter.hpp"
#include "ncp/labeling.hpp"
#include "ncp/poset.hpp"

namespace ncp {

/// A total order t_1 < t_2 < ... < t_N on the reflections of a system.
class ReflectionOrder {
 public:
  ReflectionOrder() = default;
  /// InvalidArgument unless `order` lists every reflection exactly once.
  ReflectionOrder(const CoxeterSystem& system, std::vector<GroupElement> order);

  std::size_t size() const noexcept { return order_.size(); }
  const std::vector<GroupElement>& reflections() const noexcept { return order_; }
  /// 0-based position of t; t is looked up by its canonical reflection index.
  int position(const CoxeterSystem& system, GroupElement t) const;
  /// Position of the reflection with canonical index i.
  int position_of_canonical(int i) const { return position_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const ReflectionOrder& a, const ReflectionOrder& b) { return a.order_ == b.order_; }

 private:
  std::vector<GroupElement> order_;
  std::vector<int> position_;
};

/// NC(W): the interval [e, gamma] of the absolute order. Poset index i holds
/// element(i); indices are sorted by absolute length, then group index, so
/// 0 is e and size()-1 is gamma.
class NCLattice {
 public:
  static std::shared_ptr<const NCLattice> build(std::shared_ptr<const CoxeterSystem> system);

  const CoxeterSystem& system() const noexcept { return *system_; }
  const std::shared_ptr<const CoxeterSystem>& system_ptr() const noexcept { return system_; }
  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return elements_.size(); }

  GroupElement element(std::size_t i) const { return elements_[i]; }
  std::span<const GroupElement> elements() const noexcept { return elements_; }
  std::optional<std::size_t> index_of(GroupElement w) const;
  int rank_of(std::size_t i) const { return rank_[i]; }

  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return elements_.size() - 1; }

  bool leq(std::size_t x, std::size_t y) const noexcept { return poset_.leq(x, y); }
  /// Index of x^{-1} y, which lies in NC(W) whenever x <= y; nullopt otherwise.
  std::optional<std::size_t> quotient(std::size_t x, std::size_t y) const;
  /// Index of x y if it lies in NC(W).
  std::optional<std::size_t> product(std::size_t x, std::size_t y) const;
  /// The reflection x^{-1} y labelling the cover (x, y).
  GroupElement cover_reflection(std::size_t x, std::size_t y) const;

  /// mu(e, w) for every w, computed once.
  const std::vector<std::int64_t>& mobius_from_bottom() const noexcept { return mobius_bottom_; }

 private:
  NCLattice() = default;

  std::shared_ptr<const CoxeterSystem> system_;
  std::vector<GroupElement> elements_;
  std::vector<int> index_by_group_;  // group index -> NC index or -1
  std::vector<int> rank_;
  std::vector<int> quotient_;  // size^2, -1 when not x <= y
  FinitePoset poset_;
  std::vector<std::int64_t> mobius_bottom_;
};

/// Labels the cover (x, y) of NC(W) by the position of x^{-1} y in `order`.
EdgeLabeling natural_labeling(const NCLattice& nc, const ReflectionOrder& order);

/// Inversion order of the reduced word of the longest element obtained by
/// greedily reading c c c ... for c the product of the given simple
/// generators: t_j = s_1 ... s_{j-1} s_j s_{j-1} ... s_1.
ReflectionOrder sorting_word_reflection_order(const CoxeterSystem& system, std::span<const GroupElement> word_letters);

struct OrderSearchStats {
  std::size_t checker_calls = 0;
  std::size_t candidates_tried = 0;
};

/// A reflection order making natural_labeling an EL-labeling. Candidates are
/// the sorting-word orders for gamma and gamma^{-1} and their reverses, in
/// that order; if none passes, a backtracking search over all orders seeded
/// by the first candidate runs with rank-two pruning. SearchExhausted when
/// the budget of search steps runs out. `try_candidates = false` goes
/// straight to the backtracking search.
ReflectionOrder find_el_reflection_order(const NCLattice& nc, std::size_t budget = 10'000'000,
                                         OrderSearchStats* stats = nullptr, bool try_candidates = true);

/// Hasse diagram of NC(W), edges labelled "reflection #position".
std::string to_dot(const NCLattice& nc, const ReflectionOrder& order);

}  // namespace ncp
