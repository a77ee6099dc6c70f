#include "ncp/nc.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ncp/error.hpp"

namespace ncp {

ReflectionOrder::ReflectionOrder(const CoxeterSystem& system, std::vector<GroupElement> order)
    : order_(std::move(order)), position_(system.num_reflections(), -1) {
  if (order_.size() != system.num_reflections())
    throw Error(ErrorKind::InvalidArgument, "a reflection order must list all " +
                                                std::to_string(system.num_reflections()) + " reflections");
  for (std::size_t p = 0; p < order_.size(); ++p) {
    if (!system.owns(order_[p])) throw Error(ErrorKind::MixedSystems, "reflection from another system");
    const int i = system.reflection_index(order_[p]);
    if (i < 0) throw Error(ErrorKind::InvalidArgument, system.render(order_[p]) + " is not a reflection");
    if (position_[static_cast<std::size_t>(i)] >= 0)
      throw Error(ErrorKind::InvalidArgument, system.render(order_[p]) + " listed twice");
    position_[static_cast<std::size_t>(i)] = static_cast<int>(p);
  }
}

int ReflectionOrder::position(const CoxeterSystem& system, GroupElement t) const {
  const int i = system.reflection_index(t);
  if (i < 0) throw Error(ErrorKind::InvalidArgument, system.render(t) + " is not a reflection");
  return position_of_canonical(i);
}

std::shared_ptr<const NCLattice> NCLattice::build(std::shared_ptr<const CoxeterSystem> system) {
  std::shared_ptr<NCLattice> nc(new NCLattice());
  const CoxeterSystem& W = *system;
  const GroupElement gamma = W.coxeter_element();
  for (GroupElement w : W.elements())
    if (W.absolute_leq(w, gamma)) nc->elements_.push_back(w);
  std::stable_sort(nc->elements_.begin(), nc->elements_.end(), [&](GroupElement a, GroupElement b) {
    return W.absolute_length(a) < W.absolute_length(b);
  });
  const std::size_t n = nc->elements_.size();
  nc->index_by_group_.assign(W.order(), -1);
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < n; ++i) {
    nc->index_by_group_[nc->elements_[i].index()] = static_cast<int>(i);
    nc->rank_.push_back(W.absolute_length(nc->elements_[i]));
    keys.push_back(W.render(nc->elements_[i]));
  }
  nc->quotient_.assign(n * n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    const GroupElement xinv = W.inverse(nc->elements_[x]);
    for (std::size_t y = 0; y < n; ++y) {
      const GroupElement q = W.multiply(xinv, nc->elements_[y]);
      if (nc->rank_[y] != nc->rank_[x] + W.absolute_length(q)) continue;
      nc->quotient_[x * n + y] = nc->index_by_group_[q.index()];
    }
  }
  nc->poset_ = FinitePoset::from_relation(std::move(keys), [&](std::size_t x, std::size_t y) {
    return nc->quotient_[x * n + y] >= 0;
  });
  nc->mobius_bottom_ = mobius_from(nc->poset_, 0);
  nc->system_ = std::move(system);
  return nc;
}

std::optional<std::size_t> NCLattice::index_of(GroupElement w) const {
  if (!system_->owns(w)) throw Error(ErrorKind::MixedSystems, "element from another system");
  const int i = index_by_group_[w.index()];
  if (i < 0) return std::nullopt;
  return static_cast<std::size_t>(i);
}

std::optional<std::size_t> NCLattice::quotient(std::size_t x, std::size_t y) const {
  const int q = quotient_[x * size() + y];
  if (q < 0) return std::nullopt;
  return static_cast<std::size_t>(q);
}

std::optional<std::size_t> NCLattice::product(std::size_t x, std::size_t y) const {
  return index_of(system_->multiply(elements_[x], elements_[y]));
}

GroupElement NCLattice::cover_reflection(std::size_t x, std::size_t y) const {
  if (poset_.cover_slot(x, y) < 0)
    throw Error(ErrorKind::NotUnrefinable, poset_.key(y) + " does not cover " + poset_.key(x));
  return elements_[static_cast<std::size_t>(quotient_[x * size() + y])];
}

EdgeLabeling natural_labeling(const NCLattice& nc, const ReflectionOrder& order) {
  const CoxeterSystem& W = nc.system();
  if (order.size() != W.num_reflections())
    throw Error(ErrorKind::InvalidArgument, "reflection order has the wrong size");
  std::vector<std::string> names;
  for (GroupElement t : order.reflections()) names.push_back(W.render(t));
  return EdgeLabeling(nc.poset(), LabelSet(std::move(names)), [&](std::size_t x, std::size_t y) {
    return order.position(W, nc.cover_reflection(x, y));
  });
}

ReflectionOrder sorting_word_reflection_order(const CoxeterSystem& system, std::span<const GroupElement> word_letters) {
  const int N = static_cast<int>(system.num_reflections());
  if (word_letters.empty()) throw Error(ErrorKind::InvalidArgument, "empty Coxeter word");
  std::vector<GroupElement> order;
  GroupElement w = system.identity();
  int len = 0;
  std::size_t stalled = 0;
  for (std::size_t j = 0; len < N; j = (j + 1) % word_letters.size()) {
    const GroupElement s = word_letters[j];
    const GroupElement ws = system.multiply(w, s);
    if (system.coxeter_length(ws) > len) {
      order.push_back(system.multiply(ws, system.inverse(w)));
      w = ws;
      ++len;
      stalled = 0;
    } else if (++stalled > word_letters.size()) {
      throw Error(ErrorKind::InvalidArgument, "word letters do not generate the group");
    }
  }
  return ReflectionOrder(system, std::move(order));
}

namespace {

// A rank-two interval seen through its label pairs, as canonical reflection
// indices. Only the relative order of the reflections involved matters.
struct RankTwo {
  std::vector<std::pair<int, int>> chains;
};

bool rank_two_ok(const RankTwo& r, const std::vector<int>& pos) {
  int rising = 0;
  std::pair<int, int> rising_word{}, best{};
  bool first = true;
  for (const auto& [a, b] : r.chains) {
    const std::pair<int, int> word{pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]};
    if (word.first < word.second) {
      ++rising;
      rising_word = word;
    }
    if (first || word < best) best = word;
    first = false;
  }
  return rising == 1 && rising_word == best;
}

}  // namespace

ReflectionOrder find_el_reflection_order(const NCLattice& nc, std::size_t budget, OrderSearchStats* stats,
                                         bool try_candidates) {
  const CoxeterSystem& W = nc.system();
  OrderSearchStats local;
  OrderSearchStats& st = stats ? *stats : local;
  std::size_t spent = 0;
  auto check = [&](const ReflectionOrder& order) {
    ++st.candidates_tried;
    ++st.checker_calls;
    ++spent;
    return is_el_labeling(nc.poset(), natural_labeling(nc, order)).ok;
  };

  std::vector<GroupElement> letters(W.simple_generators().begin(), W.simple_generators().end());
  std::vector<ReflectionOrder> candidates;
  for (int pass = 0; pass < 2; ++pass) {
    const ReflectionOrder forward = sorting_word_reflection_order(W, letters);
    std::vector<GroupElement> rev(forward.reflections().rbegin(), forward.reflections().rend());
    candidates.push_back(forward);
    candidates.emplace_back(W, std::move(rev));
    std::reverse(letters.begin(), letters.end());
  }
  if (try_candidates)
    for (const auto& c : candidates)
      if (check(c)) return c;

  // Backtracking in the order of the first candidate, pruned on rank-two intervals.
  const std::size_t N = W.num_reflections();
  std::vector<int> seed;
  for (GroupElement t : candidates.front().reflections()) seed.push_back(W.reflection_index(t));

  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<RankTwo> intervals;
  const FinitePoset& p = nc.poset();
  for (std::size_t x = 0; x < nc.size(); ++x) {
    std::set<std::size_t> tops;
    for (std::size_t z : p.upper_covers(x))
      for (std::size_t y : p.upper_covers(z)) tops.insert(y);
    for (std::size_t y : tops) {
      RankTwo r;
      p.for_each_between(x, y, [&](std::size_t z) {
        if (z == x || z == y) return;
        r.chains.emplace_back(W.reflection_index(nc.cover_reflection(x, z)),
                              W.reflection_index(nc.cover_reflection(z, y)));
      });
      std::sort(r.chains.begin(), r.chains.end());
      if (seen.insert(r.chains).second) intervals.push_back(std::move(r));
    }
  }
  std::vector<int> pos(N, -1);
  std::vector<int> chosen;
  std::optional<ReflectionOrder> found;

  // An interval is checkable once all its reflections are placed; index by
  // the set of reflections to re-evaluate after each placement.
  std::vector<std::vector<const RankTwo*>> touching(N);
  for (const auto& r : intervals) {
    std::set<int> ts;
    for (const auto& [a, b] : r.chains) {
      ts.insert(a);
      ts.insert(b);
    }
    for (int t : ts) touching[static_cast<std::size_t>(t)].push_back(&r);
  }
  auto all_placed = [&](const RankTwo& r) {
    for (const auto& [a, b] : r.chains)
      if (pos[static_cast<std::size_t>(a)] < 0 || pos[static_cast<std::size_t>(b)] < 0) return false;
    return true;
  };

  std::function<bool()> dfs = [&]() {
    if (spent >= budget) return false;
    if (chosen.size() == N) {
      std::vector<GroupElement> order;
      for (int i : chosen) order.push_back(W.reflections()[static_cast<std::size_t>(i)]);
      ReflectionOrder candidate(W, std::move(order));
      if (check(candidate)) {
        found = std::move(candidate);
        return true;
      }
      return false;
    }
    for (int t : seed) {
      if (pos[static_cast<std::size_t>(t)] >= 0) continue;
      ++spent;
      pos[static_cast<std::size_t>(t)] = static_cast<int>(chosen.size());
      chosen.push_back(t);
      bool ok = true;
      for (const RankTwo* r : touching[static_cast<std::size_t>(t)])
        if (all_placed(*r) && !rank_two_ok(*r, pos)) {
          ok = false;
          break;
        }
      if (ok && dfs()) return true;
      chosen.pop_back();
      pos[static_cast<std::size_t>(t)] = -1;
      if (spent >= budget) return false;
    }
    return false;
  };
  dfs();
  if (found) return *found;
  if (spent >= budget)
    throw Error(ErrorKind::SearchExhausted, "no EL reflection order found for " + W.type().name() + " within " +
                                                std::to_string(budget) + " steps");
  throw Error(ErrorKind::SearchExhausted, "no reflection order makes the natural labeling of NC(" +
                                              W.type().name() + ") an EL-labeling");
}

std::string to_dot(const NCLattice& nc, const ReflectionOrder& order) {
  const CoxeterSystem& W = nc.system();
  return to_dot(nc.poset(), [&](std::size_t x, std::size_t y) {
    const GroupElement t = nc.cover_reflection(x, y);
    return W.render(t) + " #" + std::to_string(order.position(W, t) + 1);
  });
}

}  // namespace ncp
