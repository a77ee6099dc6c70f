#include "ncp/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ncp/error.hpp"

namespace ncp {

namespace {

inline void set_bit(std::vector<std::uint64_t>& rows, std::size_t words, std::size_t x, std::size_t y) {
  rows[x * words + (y >> 6)] |= std::uint64_t{1} << (y & 63);
}

inline std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

}  // namespace

FinitePoset FinitePoset::from_relation(std::vector<std::string> keys,
                                       const std::function<bool(std::size_t, std::size_t)>& leq) {
  FinitePoset p;
  const std::size_t n = keys.size();
  p.keys_ = std::move(keys);
  p.words_ = word_count(n);
  p.up_.assign(n * p.words_, 0);
  p.down_.assign(n * p.words_, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq(x, x)) throw Error(ErrorKind::NotPartialOrder, "relation is not reflexive at " + p.keys_[x]);
    for (std::size_t y = 0; y < n; ++y) {
      if (!leq(x, y)) continue;
      set_bit(p.up_, p.words_, x, y);
      set_bit(p.down_, p.words_, y, x);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y)
      if (p.leq(x, y) && p.leq(y, x))
        throw Error(ErrorKind::NotPartialOrder, "relation is not antisymmetric on " + p.keys_[x] + ", " + p.keys_[y]);
    for (std::size_t y : p.up_set(x)) {
      for (std::size_t w = 0; w < p.words_; ++w)
        if (p.up_[y * p.words_ + w] & ~p.up_[x * p.words_ + w])
          throw Error(ErrorKind::NotPartialOrder, "relation is not transitive through " + p.keys_[y]);
    }
  }
  p.finish();
  return p;
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> keys, std::span<const Cover> covers) {
  FinitePoset p;
  const std::size_t n = keys.size();
  p.keys_ = std::move(keys);
  p.words_ = word_count(n);
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [x, y] : covers) {
    if (x >= n || y >= n) throw Error(ErrorKind::InvalidArgument, "cover refers to a missing element");
    if (x == y) throw Error(ErrorKind::NotPartialOrder, "self-cover at " + p.keys_[x]);
    succ[x].push_back(y);
    ++indegree[y];
  }
  std::vector<std::size_t> topo;
  for (std::size_t x = 0; x < n; ++x)
    if (indegree[x] == 0) topo.push_back(x);
  for (std::size_t q = 0; q < topo.size(); ++q)
    for (std::size_t y : succ[topo[q]])
      if (--indegree[y] == 0) topo.push_back(y);
  if (topo.size() != n) throw Error(ErrorKind::NotPartialOrder, "cover relation has a cycle");
  p.up_.assign(n * p.words_, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const std::size_t x = *it;
    set_bit(p.up_, p.words_, x, x);
    for (std::size_t y : succ[x])
      for (std::size_t w = 0; w < p.words_; ++w) p.up_[x * p.words_ + w] |= p.up_[y * p.words_ + w];
  }
  p.down_.assign(n * p.words_, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(x, y)) set_bit(p.down_, p.words_, y, x);
  p.finish();
  return p;
}

void FinitePoset::finish() {
  const std::size_t n = size();
  upper_.assign(n, {});
  lower_.assign(n, {});
  num_covers_ = 0;
  // y covers x iff the closed interval [x, y] has exactly two elements.
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint64_t* row = &up_[x * words_];
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        const std::size_t y = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        if (y == x) continue;
        const std::uint64_t* dy = &down_[y * words_];
        int between = 0;
        for (std::size_t v = 0; v < words_ && between <= 2; ++v)
          between += __builtin_popcountll(row[v] & dy[v]);
        if (between == 2) {
          upper_[x].push_back(y);
          lower_[y].push_back(x);
          ++num_covers_;
        }
      }
    }
  }
  for (auto& v : lower_) std::sort(v.begin(), v.end());

  // |down(x)| strictly increases along the order, so sorting by it gives a
  // linear extension for the height computation.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> down_count(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t w = 0; w < words_; ++w)
      down_count[x] += static_cast<std::size_t>(__builtin_popcountll(down_[x * words_ + w]));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return down_count[a] < down_count[b]; });
  height_.assign(n, 0);
  for (std::size_t x : order)
    for (std::size_t y : lower_[x]) height_[x] = std::max(height_[x], height_[y] + 1);
  length_ = n ? *std::max_element(height_.begin(), height_.end()) : -1;

  graded_ = true;
  for (std::size_t x = 0; x < n && graded_; ++x)
    for (std::size_t y : upper_[x])
      if (height_[y] != height_[x] + 1) graded_ = false;
  for (std::size_t x = 0; x < n && graded_; ++x)
    if (upper_[x].empty() && height_[x] != length_) graded_ = false;

  linear_ = order;
  std::sort(linear_.begin(), linear_.end(), [&](std::size_t a, std::size_t b) {
    return height_[a] != height_[b] ? height_[a] < height_[b] : a < b;
  });
}

int FinitePoset::cover_slot(std::size_t x, std::size_t y) const {
  const auto& v = upper_[x];
  auto it = std::lower_bound(v.begin(), v.end(), y);
  if (it == v.end() || *it != y) return -1;
  return static_cast<int>(it - v.begin());
}

std::vector<Cover> FinitePoset::covers() const {
  std::vector<Cover> out;
  out.reserve(num_covers_);
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y : upper_[x]) out.emplace_back(x, y);
  return out;
}

std::vector<std::size_t> FinitePoset::up_set(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < size(); ++y)
    if (leq(x, y)) out.push_back(y);
  return out;
}

std::vector<std::size_t> FinitePoset::down_set(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < size(); ++y)
    if (leq(y, x)) out.push_back(y);
  return out;
}

std::vector<std::size_t> FinitePoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (lower_[x].empty()) out.push_back(x);
  return out;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (upper_[x].empty()) out.push_back(x);
  return out;
}

std::optional<std::size_t> FinitePoset::bottom() const {
  const auto mins = minimal_elements();
  if (mins.size() != 1) return std::nullopt;
  return mins.front();
}

std::optional<std::size_t> FinitePoset::top() const {
  const auto maxs = maximal_elements();
  if (maxs.size() != 1) return std::nullopt;
  return maxs.front();
}

std::optional<int> FinitePoset::rank() const {
  if (!graded_ || empty()) return std::nullopt;
  return length_;
}

FinitePoset FinitePoset::induced(std::span<const std::size_t> subset) const {
  std::vector<std::string> keys;
  keys.reserve(subset.size());
  for (std::size_t x : subset) keys.push_back(keys_[x]);
  FinitePoset p;
  const std::size_t n = subset.size();
  p.keys_ = std::move(keys);
  p.words_ = word_count(n);
  p.up_.assign(n * p.words_, 0);
  p.down_.assign(n * p.words_, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq(subset[i], subset[j])) {
        set_bit(p.up_, p.words_, i, j);
        set_bit(p.down_, p.words_, j, i);
      }
  p.finish();
  return p;
}

FinitePoset adjoin_bottom(const FinitePoset& p, std::string key) {
  const std::size_t n = p.size();
  auto keys = p.keys();
  keys.push_back(std::move(key));
  return FinitePoset::from_relation(std::move(keys), [&](std::size_t x, std::size_t y) {
    if (x == n) return true;
    if (y == n) return false;
    return p.leq(x, y);
  });
}

FinitePoset adjoin_top(const FinitePoset& p, std::string key) {
  const std::size_t n = p.size();
  auto keys = p.keys();
  keys.push_back(std::move(key));
  return FinitePoset::from_relation(std::move(keys), [&](std::size_t x, std::size_t y) {
    if (y == n) return true;
    if (x == n) return false;
    return p.leq(x, y);
  });
}

FinitePoset remove_minimals(const FinitePoset& p) {
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (!p.lower_covers(x).empty()) keep.push_back(x);
  return p.induced(keep);
}

FinitePoset remove_maximals(const FinitePoset& p) {
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (!p.upper_covers(x).empty()) keep.push_back(x);
  return p.induced(keep);
}

FinitePoset dualize(const FinitePoset& p) {
  FinitePoset d;
  d.keys_ = p.keys_;
  d.words_ = p.words_;
  d.up_ = p.down_;
  d.down_ = p.up_;
  d.finish();
  return d;
}

FinitePoset interval(const FinitePoset& p, std::size_t x, std::size_t y) {
  if (!p.leq(x, y))
    throw Error(ErrorKind::NotComparable, p.key(x) + " is not below " + p.key(y));
  std::vector<std::size_t> between;
  p.for_each_between(x, y, [&](std::size_t z) { between.push_back(z); });
  return p.induced(between);
}

std::vector<std::int64_t> mobius_from(const FinitePoset& p, std::size_t x) {
  std::vector<std::int64_t> mu(p.size(), 0);
  mu[x] = 1;
  for (std::size_t y : p.linear_extension()) {
    if (y == x || !p.leq(x, y)) continue;
    std::int64_t s = 0;
    p.for_each_between(x, y, [&](std::size_t z) {
      if (z != y) s += mu[z];
    });
    mu[y] = -s;
  }
  return mu;
}

std::int64_t mobius_number(const FinitePoset& p) {
  const auto b = p.bottom();
  const auto t = p.top();
  if (!b || !t) throw Error(ErrorKind::NotBounded, "Mobius number needs a unique minimum and maximum");
  return mobius_from(p, *b)[*t];
}

std::int64_t mobius_by_hall(const FinitePoset& p, std::uint64_t cap) {
  const auto b = p.bottom();
  const auto t = p.top();
  if (!b || !t) throw Error(ErrorKind::NotBounded, "Mobius number needs a unique minimum and maximum");
  using Count = unsigned __int128;
  const std::size_t n = p.size();
  std::vector<Count> prev(n, 0), next(n, 0);
  prev[*b] = 1;
  Count total = 0;
  __int128 alternating = 0;
  if (*b == *t) return 1;
  for (int len = 1; len <= p.length(); ++len) {
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (std::size_t y : p.linear_extension()) {
      if (!p.leq(*b, y) || y == *b) continue;
      Count s = 0;
      p.for_each_between(*b, y, [&](std::size_t z) {
        if (z != y) s += prev[z];
      });
      next[y] = s;
      any = any || s != 0;
    }
    const Count c = next[*t];
    total += c;
    if (total > cap)
      throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " chains from bottom to top");
    alternating += (len % 2 == 0) ? static_cast<__int128>(c) : -static_cast<__int128>(c);
    std::swap(prev, next);
    if (!any) break;
  }
  return static_cast<std::int64_t>(alternating);
}

LemmaCheck lemma_maxs_deletion_check(const FinitePoset& p) {
  const auto b = p.bottom();
  if (!b) throw Error(ErrorKind::NoMinimum, "the identity needs a unique minimum");
  if (p.size() < 2) throw Error(ErrorKind::NoMinimum, "deleting maxs(P) removes the minimum of a one-point poset");
  const auto maxs = p.maximal_elements();
  LemmaCheck out;
  out.lhs = mobius_number(adjoin_top(remove_maximals(p)));
  const auto mu = mobius_from(p, *b);
  out.rhs = mobius_number(adjoin_top(p));
  for (std::size_t x : maxs) out.rhs += mu[x];
  out.equal = out.lhs == out.rhs;
  return out;
}

nlohmann::json to_json(const FinitePoset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [x, y] : p.covers()) covers.push_back({x, y});
  return {{"elements", p.keys()}, {"covers", covers}, {"graded", p.is_graded()}, {"rank", p.length()}};
}

FinitePoset poset_from_json(const nlohmann::json& j) {
  auto keys = j.at("elements").get<std::vector<std::string>>();
  std::vector<Cover> covers;
  for (const auto& c : j.at("covers")) covers.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
  return FinitePoset::from_covers(std::move(keys), covers);
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_dot(const FinitePoset& p, const EdgeText& edge_label) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t x = 0; x < p.size(); ++x) os << "  n" << x << " [label=\"" << dot_escape(p.key(x)) << "\"];\n";
  for (int h = 0; h <= p.length(); ++h) {
    os << "  { rank=same;";
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p.height(x) == h) os << " n" << x << ";";
    os << " }\n";
  }
  for (const auto& [x, y] : p.covers()) {
    os << "  n" << x << " -> n" << y;
    if (edge_label) os << " [label=\"" << dot_escape(edge_label(x, y)) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ncp
