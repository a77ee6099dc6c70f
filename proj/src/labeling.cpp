#include "ncp/labeling.hpp"

#include <algorithm>
#include <map>

#include "ncp/error.hpp"

namespace ncp {

EdgeLabeling::EdgeLabeling(const FinitePoset& poset, LabelSet labels,
                           const std::function<int(std::size_t, std::size_t)>& label_of)
    : labels_(std::move(labels)), by_slot_(poset.size()) {
  for (std::size_t x = 0; x < poset.size(); ++x) {
    for (std::size_t y : poset.upper_covers(x)) {
      const int l = label_of(x, y);
      if (l < 0 || static_cast<std::size_t>(l) >= labels_.size())
        throw Error(ErrorKind::InvalidArgument, "label position out of range on " + poset.key(x) + " -> " + poset.key(y));
      by_slot_[x].push_back(l);
    }
  }
}

int EdgeLabeling::label(const FinitePoset& poset, std::size_t x, std::size_t y) const {
  const int slot = poset.cover_slot(x, y);
  if (slot < 0) throw Error(ErrorKind::NotUnrefinable, poset.key(y) + " does not cover " + poset.key(x));
  return by_slot_[x][static_cast<std::size_t>(slot)];
}

LabelWord chain_label_word(const FinitePoset& poset, const EdgeLabeling& labeling, std::span<const std::size_t> chain) {
  LabelWord word;
  for (std::size_t i = 1; i < chain.size(); ++i) word.push_back(labeling.label(poset, chain[i - 1], chain[i]));
  return word;
}

bool is_rising(std::span<const int> word) {
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i - 1] >= word[i]) return false;
  return true;
}

bool is_falling(std::span<const int> word) {
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i - 1] < word[i]) return false;
  return true;
}

namespace {

// Rising chains from a fixed u that end at some y, grouped by last label.
// Counts saturate at 2; `word` is meaningful only when count == 1.
struct RisingGroup {
  int last;
  int count;
  LabelWord word;
};

ElWitness make_witness(const FinitePoset& poset, const EdgeLabeling& labeling, std::size_t u, std::size_t v,
                       std::string reason) {
  ElWitness w{u, v, std::move(reason), {}};
  std::vector<std::size_t> best;
  LabelWord best_word;
  std::size_t seen = 0;
  for_each_maximal_chain(poset, u, v, [&](std::span<const std::size_t> chain) {
    const LabelWord word = chain_label_word(poset, labeling, chain);
    if (best.empty() || word < best_word) {
      best.assign(chain.begin(), chain.end());
      best_word = word;
    }
    if (is_rising(word) && w.chains.size() < 4) w.chains.emplace_back(chain.begin(), chain.end());
    return ++seen < 100000;
  });
  if (!best.empty() && std::find(w.chains.begin(), w.chains.end(), best) == w.chains.end())
    w.chains.push_back(std::move(best));
  return w;
}

}  // namespace

ElResult is_el_labeling(const FinitePoset& poset, const EdgeLabeling& labeling) {
  if (!poset.is_graded()) throw Error(ErrorKind::NotGraded, "EL-labelings are defined on graded posets");
  ElResult result;
  const std::size_t n = poset.size();
  std::vector<std::vector<RisingGroup>> rising(n);
  std::vector<LabelWord> lexmin(n);
  std::vector<char> active(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    std::fill(active.begin(), active.end(), 0);
    active[u] = 1;
    rising[u].clear();
    lexmin[u].clear();
    for (std::size_t y : poset.linear_extension()) {
      if (y == u || !poset.leq(u, y)) continue;
      active[y] = 1;
      std::map<int, RisingGroup> groups;
      bool have_min = false;
      LabelWord best;
      for (std::size_t z : poset.lower_covers(y)) {
        if (!active[z]) continue;
        const int l = labeling.label(poset, z, y);
        LabelWord candidate = lexmin[z];
        candidate.push_back(l);
        if (!have_min || candidate < best) {
          best = std::move(candidate);
          have_min = true;
        }
        int count = 0;
        const LabelWord* rep = nullptr;
        static const LabelWord empty;
        if (z == u) {
          count = 1;
          rep = &empty;
        } else {
          for (const auto& g : rising[z]) {
            if (g.last >= l) continue;
            count = std::min(2, count + g.count);
            if (g.count == 1) rep = &g.word;
          }
        }
        if (count == 0) continue;
        auto [it, fresh] = groups.try_emplace(l, RisingGroup{l, 0, {}});
        it->second.count = std::min(2, it->second.count + count);
        if (it->second.count == 1 && count == 1 && rep) {
          it->second.word = *rep;
          it->second.word.push_back(l);
        }
      }
      lexmin[y] = std::move(best);
      rising[y].clear();
      int total = 0;
      const LabelWord* unique = nullptr;
      for (auto& [l, g] : groups) {
        total = std::min(2, total + g.count);
        rising[y].push_back(std::move(g));
      }
      if (total == 1) {
        for (const auto& g : rising[y])
          if (g.count == 1) unique = &g.word;
      }
      ++result.intervals_checked;
      if (total == 0) {
        result.ok = false;
        result.witness = make_witness(poset, labeling, u, y, "no rising maximal chain");
        return result;
      }
      if (total > 1) {
        result.ok = false;
        result.witness = make_witness(poset, labeling, u, y, "more than one rising maximal chain");
        return result;
      }
      if (*unique != lexmin[y]) {
        result.ok = false;
        result.witness = make_witness(poset, labeling, u, y, "rising chain is not lexicographically smallest");
        return result;
      }
    }
  }
  return result;
}

nlohmann::json witness_to_json(const ElWitness& witness, const FinitePoset& poset, const EdgeLabeling& labeling) {
  nlohmann::json chains = nlohmann::json::array();
  for (const auto& c : witness.chains) {
    nlohmann::json elems = nlohmann::json::array();
    for (std::size_t x : c) elems.push_back(poset.key(x));
    nlohmann::json word = nlohmann::json::array();
    for (int l : chain_label_word(poset, labeling, c)) word.push_back(labeling.labels().name(l));
    chains.push_back({{"elements", elems}, {"labels", word}});
  }
  return {{"interval", {poset.key(witness.lower), poset.key(witness.upper)}},
          {"reason", witness.reason},
          {"chains", chains}};
}

void for_each_maximal_chain(const FinitePoset& poset, std::size_t from, std::size_t to,
                            const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (!poset.leq(from, to)) return;
  std::vector<std::size_t> chain{from};
  bool stop = false;
  std::function<void(std::size_t)> dfs = [&](std::size_t x) {
    if (stop) return;
    if (x == to) {
      if (!visit(chain)) stop = true;
      return;
    }
    for (std::size_t y : poset.upper_covers(x)) {
      if (!poset.leq(y, to)) continue;
      chain.push_back(y);
      dfs(y);
      chain.pop_back();
      if (stop) return;
    }
  };
  dfs(from);
}

void for_each_falling_maximal_chain(const FinitePoset& poset, const EdgeLabeling& labeling,
                                    const std::function<bool(std::span<const std::size_t>)>& visit) {
  const auto b = poset.bottom();
  const auto t = poset.top();
  if (!b || !t) throw Error(ErrorKind::NotBounded, "falling chains are counted between 0hat and 1hat");
  std::vector<std::size_t> chain{*b};
  bool stop = false;
  std::function<void(std::size_t, int)> dfs = [&](std::size_t x, int last) {
    if (x == *t) {
      if (!visit(chain)) stop = true;
      return;
    }
    const auto ups = poset.upper_covers(x);
    for (std::size_t slot = 0; slot < ups.size() && !stop; ++slot) {
      const int l = labeling.at_slot(x, slot);
      if (l > last) continue;
      chain.push_back(ups[slot]);
      dfs(ups[slot], l);
      chain.pop_back();
    }
  };
  dfs(*b, std::numeric_limits<int>::max());
}

std::uint64_t count_falling_maximal_chains(const FinitePoset& poset, const EdgeLabeling& labeling) {
  if (!poset.is_graded()) throw Error(ErrorKind::NotGraded, "falling-chain census needs a graded poset");
  const auto b = poset.bottom();
  const auto t = poset.top();
  if (!b || !t) throw Error(ErrorKind::NotBounded, "falling chains are counted between 0hat and 1hat");
  if (*b == *t) return 1;
  // falling[y]: last label -> number of falling chains from 0hat to y.
  std::vector<std::map<int, std::uint64_t>> falling(poset.size());
  falling[*b][std::numeric_limits<int>::max()] = 1;
  for (std::size_t x : poset.linear_extension()) {
    if (falling[x].empty()) continue;
    const auto ups = poset.upper_covers(x);
    for (std::size_t slot = 0; slot < ups.size(); ++slot) {
      const int l = labeling.at_slot(x, slot);
      std::uint64_t s = 0;
      for (auto it = falling[x].lower_bound(l); it != falling[x].end(); ++it) s += it->second;
      if (s) falling[ups[slot]][l] += s;
    }
  }
  std::uint64_t total = 0;
  for (const auto& [l, c] : falling[*t]) total += c;
  return total;
}

}  // namespace ncp
