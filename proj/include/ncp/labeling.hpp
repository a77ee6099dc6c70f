#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncp/poset.hpp"

namespace ncp {

/// A totally ordered label set; labels are compared by position.
class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(std::vector<std::string> names) : names_(std::move(names)) {}

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(int position) const { return names_.at(static_cast<std::size_t>(position)); }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
};

/// A map from the cover relations of one poset into a LabelSet, stored
/// against the poset's upper_covers() slots.
class EdgeLabeling {
 public:
  EdgeLabeling() = default;
  /// Labels every cover of `poset` with label_of(x, y), a position in `labels`.
  EdgeLabeling(const FinitePoset& poset, LabelSet labels, const std::function<int(std::size_t, std::size_t)>& label_of);

  const LabelSet& labels() const noexcept { return labels_; }
  int at_slot(std::size_t x, std::size_t slot) const { return by_slot_[x][slot]; }
  /// Label of the cover (x, y); NotUnrefinable if y does not cover x.
  int label(const FinitePoset& poset, std::size_t x, std::size_t y) const;

 private:
  LabelSet labels_;
  std::vector<std::vector<int>> by_slot_;
};

using LabelWord = std::vector<int>;

/// NotUnrefinable unless consecutive chain entries are covers.
LabelWord chain_label_word(const FinitePoset& poset, const EdgeLabeling& labeling, std::span<const std::size_t> chain);

/// Strictly increasing.
bool is_rising(std::span<const int> word);
/// Weakly decreasing.
bool is_falling(std::span<const int> word);

struct ElWitness {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::string reason;
  std::vector<std::vector<std::size_t>> chains;  // offending maximal chains of [lower, upper]
};

struct ElResult {
  bool ok = true;
  std::optional<ElWitness> witness;
  std::size_t intervals_checked = 0;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks, for every nonsingleton interval [u, v], that exactly one maximal
/// chain is rising and that its label word is the lexicographically smallest
/// one. NotGraded if the poset is not graded.
ElResult is_el_labeling(const FinitePoset& poset, const EdgeLabeling& labeling);

nlohmann::json witness_to_json(const ElWitness& witness, const FinitePoset& poset, const EdgeLabeling& labeling);

/// Visits the maximal chains of [from, to] in lexicographic order of element
/// indices; the visitor returns false to stop early.
void for_each_maximal_chain(const FinitePoset& poset, std::size_t from, std::size_t to,
                            const std::function<bool(std::span<const std::size_t>)>& visit);

/// Visits falling maximal chains of a bounded poset, pruning at the first
/// rising step. The visitor returns false to stop early.
void for_each_falling_maximal_chain(const FinitePoset& poset, const EdgeLabeling& labeling,
                                    const std::function<bool(std::span<const std::size_t>)>& visit);

/// Number of maximal chains with weakly decreasing label word. Requires a
/// bounded graded poset (NotBounded / NotGraded).
std::uint64_t count_falling_maximal_chains(const FinitePoset& poset, const EdgeLabeling& labeling);

}  // namespace ncp
