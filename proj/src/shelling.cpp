#include "ncp/shelling.hpp"

#include <limits>
#include <map>

#include "ncp/error.hpp"

namespace ncp {

FinitePoset with_top(const NcLower& lower) { return adjoin_top(lower.poset()); }

int lex_abw_position(int block, int p, int num_reflections) {
  return (block - 1) * num_reflections + p + (block >= 2 ? 1 : 0);
}

EdgeLabeling lex_abw_labeling(const NcLower& lower, const FinitePoset& top_poset, const ReflectionOrder& base_order) {
  const NCLattice& nc = lower.nc();
  const CoxeterSystem& W = nc.system();
  const int N = static_cast<int>(W.num_reflections());
  const int k = lower.k();
  if (top_poset.size() != lower.size() + 1)
    throw Error(ErrorKind::InvalidArgument, "labeling expects NC_(k) with 1hat adjoined");
  std::vector<std::string> names(static_cast<std::size_t>(k * N + 1));
  for (int i = 1; i <= k; ++i)
    for (int p = 0; p < N; ++p)
      names[static_cast<std::size_t>(lex_abw_position(i, p, N))] =
          std::to_string(i) + ":" + W.render(base_order.reflections()[static_cast<std::size_t>(p)]);
  names[static_cast<std::size_t>(N)] = kThetaLabel;
  const std::size_t top = lower.size();
  return EdgeLabeling(top_poset, LabelSet(std::move(names)), [&](std::size_t x, std::size_t y) {
    if (y == top) return N;
    const IndexTuple& a = lower.deltas(x);
    const IndexTuple& b = lower.deltas(y);
    int changed = -1;
    for (int i = 0; i < k; ++i) {
      if (a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)]) continue;
      if (changed >= 0)
        throw Error(ErrorKind::MalformedCover, top_poset.key(x) + " -> " + top_poset.key(y) + " changes two coordinates");
      changed = i;
    }
    if (changed < 0) throw Error(ErrorKind::MalformedCover, "cover between equal sequences");
    const auto c = static_cast<std::size_t>(changed);
    if (nc.poset().cover_slot(a[c], b[c]) < 0)
      throw Error(ErrorKind::MalformedCover, top_poset.key(x) + " -> " + top_poset.key(y) + " is not a reflection step");
    const GroupElement t = nc.cover_reflection(a[c], b[c]);
    return lex_abw_position(changed + 1, base_order.position(W, t), N);
  });
}

std::vector<std::uint64_t> falling_counts_from_bottom(const NCLattice& nc, const ReflectionOrder& order) {
  const FinitePoset& p = nc.poset();
  const EdgeLabeling lab = natural_labeling(nc, order);
  std::vector<std::map<int, std::uint64_t>> falling(nc.size());
  falling[nc.bottom()][std::numeric_limits<int>::max()] = 1;
  for (std::size_t x : p.linear_extension()) {
    const auto ups = p.upper_covers(x);
    for (std::size_t slot = 0; slot < ups.size(); ++slot) {
      const int l = lab.at_slot(x, slot);
      std::uint64_t s = 0;
      for (auto it = falling[x].lower_bound(l); it != falling[x].end(); ++it) s += it->second;
      if (s) falling[ups[slot]][l] += s;
    }
  }
  std::vector<std::uint64_t> out(nc.size(), 0);
  for (std::size_t x = 0; x < nc.size(); ++x)
    for (const auto& [l, c] : falling[x]) out[x] += c;
  return out;
}

FallingCensus falling_chain_decomposition_census(const NcLower& lower, const ReflectionOrder& base_order) {
  const NCLattice& nc = lower.nc();
  const auto F = falling_counts_from_bottom(nc, base_order);
  FallingCensus c;
  c.per_block.assign(static_cast<std::size_t>(lower.k()), 0);
  for (std::size_t x : lower.poset().maximal_elements()) {
    const IndexTuple& d = lower.deltas(x);
    if (d[0] != nc.bottom()) continue;
    ++c.contributing_maximals;
    std::uint64_t prod = 1;
    for (std::size_t i = 1; i < d.size(); ++i) {
      prod *= F[d[i]];
      c.per_block[i] += F[d[i]];
    }
    c.total += prod;
  }
  return c;
}

nlohmann::json to_json(const FallingCensus& c) {
  return {{"total", c.total}, {"contributing_maximals", c.contributing_maximals}, {"per_block", c.per_block}};
}

FirstBlockCheck check_falling_first_block(const NcLower& lower, const FinitePoset& top_poset,
                                          const EdgeLabeling& labeling) {
  FirstBlockCheck r;
  const std::size_t e = lower.nc().bottom();
  for_each_falling_maximal_chain(top_poset, labeling, [&](std::span<const std::size_t> chain) {
    ++r.chains;
    const std::size_t last = chain[chain.size() - 2];
    if (last >= lower.size() || lower.deltas(last)[0] != e) ++r.violations;
    return true;
  });
  return r;
}

std::int64_t factorization_mobius_sum(const NCLattice& nc, int j, std::size_t max_elements) {
  const auto& mu = nc.mobius_from_bottom();
  std::int64_t sum = 0;
  for (const auto& f : maximal_factorizations(nc, j, max_elements)) {
    std::int64_t prod = 1;
    for (auto d : f) prod *= mu[d];
    sum += prod;
  }
  return sum;
}

std::int64_t sum_mobius_to_maxs(const FinitePoset& p) {
  const auto b = p.bottom();
  if (!b) throw Error(ErrorKind::NoMinimum, "sum over maximal elements needs a unique minimum");
  const auto mu = mobius_from(p, *b);
  std::int64_t s = 0;
  for (std::size_t x : p.maximal_elements()) s += mu[x];
  return s;
}

}  // namespace ncp
