#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ncp {

using Cover = std::pair<std::size_t, std::size_t>;

/// A finite poset on the indices 0..size()-1 with opaque string keys. The
/// order is stored as its reachability closure (one bit row per element, in
/// both directions) together with the Hasse diagram. Immutable once built.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// `leq` must be a reflexive partial order; antisymmetry and transitivity
  /// are checked (NotPartialOrder).
  static FinitePoset from_relation(std::vector<std::string> keys,
                                   const std::function<bool(std::size_t, std::size_t)>& leq);
  /// Builds the order generated by the given relations; they need not be
  /// transitively reduced. Cycles raise NotPartialOrder.
  static FinitePoset from_covers(std::vector<std::string> keys, std::span<const Cover> covers);

  std::size_t size() const noexcept { return keys_.size(); }
  bool empty() const noexcept { return keys_.empty(); }
  const std::string& key(std::size_t x) const { return keys_[x]; }
  const std::vector<std::string>& keys() const noexcept { return keys_; }

  bool leq(std::size_t x, std::size_t y) const noexcept { return test(up_, x, y); }
  bool less(std::size_t x, std::size_t y) const noexcept { return x != y && leq(x, y); }
  bool comparable(std::size_t x, std::size_t y) const noexcept { return leq(x, y) || leq(y, x); }

  std::span<const std::size_t> upper_covers(std::size_t x) const { return upper_[x]; }
  std::span<const std::size_t> lower_covers(std::size_t x) const { return lower_[x]; }
  /// Position of y in upper_covers(x), or -1 when x is not covered by y.
  int cover_slot(std::size_t x, std::size_t y) const;
  std::vector<Cover> covers() const;
  std::size_t num_covers() const noexcept { return num_covers_; }

  /// Elements z with x <= z, ascending.
  std::vector<std::size_t> up_set(std::size_t x) const;
  /// Elements z with z <= x, ascending.
  std::vector<std::size_t> down_set(std::size_t x) const;

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;
  bool is_bounded() const { return bottom() && top(); }

  /// Length of the longest chain ending at x.
  int height(std::size_t x) const { return height_[x]; }
  /// Length of the longest chain (-1 for the empty poset).
  int length() const noexcept { return length_; }
  /// True iff all maximal chains have the same length.
  bool is_graded() const noexcept { return graded_; }
  /// Common length of the maximal chains; nullopt unless graded and nonempty.
  std::optional<int> rank() const;

  /// Calls f(z) for every z with x <= z <= y, ascending.
  template <class F>
  void for_each_between(std::size_t x, std::size_t y, F&& f) const {
    const std::uint64_t* a = &up_[x * words_];
    const std::uint64_t* b = &down_[y * words_];
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = a[w] & b[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
        bits &= bits - 1;
      }
    }
  }

  /// Elements ordered by height, then index.
  const std::vector<std::size_t>& linear_extension() const noexcept { return linear_; }

  /// Induced subposet on `subset` (listed order becomes the new indexing).
  FinitePoset induced(std::span<const std::size_t> subset) const;

 private:
  using Bits = std::vector<std::uint64_t>;
  bool test(const Bits& rows, std::size_t x, std::size_t y) const noexcept {
    return (rows[x * words_ + (y >> 6)] >> (y & 63)) & 1U;
  }
  void finish();  // covers, heights, gradedness from the closure

  std::vector<std::string> keys_;
  std::size_t words_ = 0;
  Bits up_;    // row x: {y : x <= y}
  Bits down_;  // row x: {y : y <= x}
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
  std::size_t num_covers_ = 0;
  std::vector<int> height_;
  std::vector<std::size_t> linear_;
  int length_ = -1;
  bool graded_ = true;

  friend FinitePoset dualize(const FinitePoset& p);
};

inline constexpr const char* kBottomKey = "0hat";
inline constexpr const char* kTopKey = "1hat";

/// New element appended at index size(), below everything.
FinitePoset adjoin_bottom(const FinitePoset& p, std::string key = kBottomKey);
/// New element appended at index size(), above everything.
FinitePoset adjoin_top(const FinitePoset& p, std::string key = kTopKey);
FinitePoset remove_minimals(const FinitePoset& p);
FinitePoset remove_maximals(const FinitePoset& p);
/// Same indices and keys, order reversed.
FinitePoset dualize(const FinitePoset& p);
/// Induced subposet on [x, y]; NotComparable unless x <= y.
FinitePoset interval(const FinitePoset& p, std::size_t x, std::size_t y);

/// mu(x, y) for every y (zero when y is not above x).
std::vector<std::int64_t> mobius_from(const FinitePoset& p, std::size_t x);
/// mu(0hat, 1hat); NotBounded otherwise.
std::int64_t mobius_number(const FinitePoset& p);

inline constexpr std::uint64_t kDefaultChainCap = 100'000'000;

/// Philip Hall's theorem: mu(0hat, 1hat) = sum_i (-1)^i c_i with c_i the
/// number of chains 0hat = x_0 < x_1 < ... < x_i = 1hat. The chains are
/// counted by length with a dynamic program over the strict order; a total
/// chain count above `cap` raises CapExceeded.
std::int64_t mobius_by_hall(const FinitePoset& p, std::uint64_t cap = kDefaultChainCap);

struct LemmaCheck {
  std::int64_t lhs = 0;  // mu(P \ maxs(P) + 1hat)
  std::int64_t rhs = 0;  // mu(P + 1hat) + sum over maxs x of mu([0hat, x])
  bool equal = false;
};

/// Evaluates both sides of the max-deletion identity independently.
/// NoMinimum unless P has a unique minimum that survives deleting maxs(P).
LemmaCheck lemma_maxs_deletion_check(const FinitePoset& p);

/// {"elements":[keys], "covers":[[i,j],...], "graded":bool, "rank":int};
/// rank is the longest chain length, which is the rank when graded.
nlohmann::json to_json(const FinitePoset& p);
FinitePoset poset_from_json(const nlohmann::json& j);

using EdgeText = std::function<std::string(std::size_t, std::size_t)>;
/// Hasse diagram, bottom to top, one `rank=same` block per height.
std::string to_dot(const FinitePoset& p, const EdgeText& edge_label = {});

}  // namespace ncp
