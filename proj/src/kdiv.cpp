#include "ncp/kdiv.hpp"

#include <algorithm>
#include <functional>

#include "ncp/error.hpp"

namespace ncp {

namespace {

void check_k(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be a positive integer, got " + std::to_string(k));
}

void check_cap(std::size_t count, std::size_t cap, const std::string& what) {
  if (count > cap)
    throw Error(ErrorKind::ScaleExceeded, what + " has more than " + std::to_string(cap) +
                                              " elements; raise --max-elements to continue");
}

std::size_t as_index(std::optional<std::size_t> i, const char* what) {
  if (!i) throw Error(ErrorKind::InvalidArgument, what);
  return *i;
}

}  // namespace

std::string render_tuple(const NCLattice& nc, const IndexTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += nc.poset().key(t[i]);
  }
  return s + ")";
}

std::shared_ptr<const NcUpper> NcUpper::build(std::shared_ptr<const NCLattice> nc, int k, KdivOptions options) {
  check_k(k);
  std::shared_ptr<NcUpper> up(new NcUpper());
  up->k_ = k;
  const FinitePoset& base = nc->poset();
  const std::string what = "NC^(" + std::to_string(k) + ")(" + nc->system().type().name() + ")";
  IndexTuple cur;
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    if (cur.size() == static_cast<std::size_t>(k)) {
      up->chains_.push_back(cur);
      check_cap(up->chains_.size(), options.max_elements, what);
      return;
    }
    for (std::size_t y : base.up_set(from)) {
      cur.push_back(static_cast<std::uint32_t>(y));
      dfs(y);
      cur.pop_back();
    }
  };
  dfs(nc->bottom());
  for (std::size_t i = 0; i < up->chains_.size(); ++i) up->index_[up->chains_[i]] = i;

  std::vector<IndexTuple> ds;
  std::vector<std::string> keys;
  up->nc_ = std::move(nc);
  for (std::size_t i = 0; i < up->chains_.size(); ++i) {
    ds.push_back(up->deltas(i));
    keys.push_back(render_tuple(*up->nc_, up->chains_[i]));
  }
  up->poset_ = FinitePoset::from_relation(std::move(keys), [&](std::size_t a, std::size_t b) {
    for (int i = 0; i < k; ++i)
      if (!base.leq(ds[b][static_cast<std::size_t>(i)], ds[a][static_cast<std::size_t>(i)])) return false;
    return true;
  });
  return up;
}

MultiChain NcUpper::element(std::size_t i) const {
  MultiChain m;
  for (auto x : chains_[i]) m.entries.push_back(nc_->element(x));
  return m;
}

IndexTuple NcUpper::deltas(std::size_t i) const {
  const IndexTuple& c = chains_[i];
  IndexTuple d;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const std::size_t next = j + 1 < c.size() ? c[j + 1] : nc_->top();
    d.push_back(static_cast<std::uint32_t>(as_index(nc_->quotient(c[j], next), "multichain is not increasing")));
  }
  return d;
}

std::optional<std::size_t> NcUpper::index_of(const IndexTuple& chain) const {
  auto it = index_.find(chain);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::shared_ptr<const NcLower> NcLower::build(std::shared_ptr<const NCLattice> nc, int k, KdivOptions options) {
  check_k(k);
  std::shared_ptr<NcLower> low(new NcLower());
  low->k_ = k;
  low->reading_ = options.reading;
  const CoxeterSystem& W = nc->system();
  const FinitePoset& base = nc->poset();
  const std::string what = "NC_(" + std::to_string(k) + ")(" + W.type().name() + ")";
  IndexTuple cur;
  if (options.reading == DeltaReading::Resolved) {
    // Prefix products run along a multichain of NC(W).
    std::function<void(std::size_t)> dfs = [&](std::size_t prefix) {
      if (cur.size() == static_cast<std::size_t>(k)) {
        low->seqs_.push_back(cur);
        check_cap(low->seqs_.size(), options.max_elements, what);
        return;
      }
      for (std::size_t q : base.up_set(prefix)) {
        cur.push_back(static_cast<std::uint32_t>(*nc->quotient(prefix, q)));
        dfs(q);
        cur.pop_back();
      }
    };
    dfs(nc->bottom());
  } else {
    std::function<void(GroupElement, int)> dfs = [&](GroupElement prefix, int len) {
      if (cur.size() == static_cast<std::size_t>(k)) {
        low->seqs_.push_back(cur);
        check_cap(low->seqs_.size(), options.max_elements, what);
        return;
      }
      for (std::size_t d = 0; d < nc->size(); ++d) {
        const GroupElement p = W.multiply(prefix, nc->element(d));
        if (W.absolute_length(p) != len + nc->rank_of(d)) continue;
        cur.push_back(static_cast<std::uint32_t>(d));
        dfs(p, len + nc->rank_of(d));
        cur.pop_back();
      }
    };
    dfs(W.identity(), 0);
  }
  for (std::size_t i = 0; i < low->seqs_.size(); ++i) low->index_[low->seqs_[i]] = i;

  std::vector<std::string> keys;
  for (const auto& s : low->seqs_) keys.push_back(render_tuple(*nc, s));
  const auto& seqs = low->seqs_;
  low->poset_ = FinitePoset::from_relation(std::move(keys), [&](std::size_t a, std::size_t b) {
    for (int i = 0; i < k; ++i)
      if (!base.leq(seqs[a][static_cast<std::size_t>(i)], seqs[b][static_cast<std::size_t>(i)])) return false;
    return true;
  });
  low->nc_ = std::move(nc);
  return low;
}

DeltaSequence NcLower::element(std::size_t i) const {
  DeltaSequence d;
  for (auto x : seqs_[i]) d.entries.push_back(nc_->element(x));
  return d;
}

std::optional<std::size_t> NcLower::index_of(const IndexTuple& deltas) const {
  auto it = index_.find(deltas);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int NcLower::grade(std::size_t i) const {
  int g = 0;
  for (auto x : seqs_[i]) g += nc_->rank_of(x);
  return g;
}

std::shared_ptr<const NcUpper> build_nc_upper(std::shared_ptr<const NCLattice> nc, int k, KdivOptions options) {
  return NcUpper::build(std::move(nc), k, options);
}

std::shared_ptr<const NcLower> build_nc_lower(std::shared_ptr<const NCLattice> nc, int k, KdivOptions options) {
  return NcLower::build(std::move(nc), k, options);
}

std::string_view to_string(DualityVariant v) noexcept {
  return v == DualityVariant::Quotient ? "quotient" : "reversed";
}

std::size_t duality_map(const NcUpper& upper, const NcLower& lower, std::size_t i, DualityVariant variant) {
  IndexTuple d = upper.deltas(i);
  if (variant == DualityVariant::Reversed) std::reverse(d.begin(), d.end());
  return as_index(lower.index_of(d), "duality image is not a delta sequence");
}

std::size_t duality_inverse(const NcUpper& upper, const NcLower& lower, std::size_t j, DualityVariant variant) {
  const NCLattice& nc = upper.nc();
  const CoxeterSystem& W = nc.system();
  IndexTuple d = lower.deltas(j);
  if (variant == DualityVariant::Reversed) std::reverse(d.begin(), d.end());
  GroupElement product = W.identity();
  for (auto x : d) product = W.multiply(product, nc.element(x));
  GroupElement pi = W.multiply(W.coxeter_element(), W.inverse(product));
  IndexTuple chain;
  for (auto x : d) {
    chain.push_back(static_cast<std::uint32_t>(as_index(nc.index_of(pi), "duality preimage leaves NC(W)")));
    pi = W.multiply(pi, nc.element(x));
  }
  return as_index(upper.index_of(chain), "duality preimage is not a multichain");
}

DualityCheck check_duality(const NcUpper& upper, const NcLower& lower, DualityVariant variant) {
  DualityCheck c;
  if (upper.size() != lower.size()) return c;
  const std::size_t n = upper.size();
  std::vector<std::size_t> image(n);
  std::vector<char> hit(n, 0);
  try {
    for (std::size_t i = 0; i < n; ++i) {
      image[i] = duality_map(upper, lower, i, variant);
      if (hit[image[i]]) return c;
      hit[image[i]] = 1;
    }
  } catch (const Error&) {
    return c;
  }
  c.bijective = true;
  c.order_reversing = true;
  for (std::size_t a = 0; a < n && c.order_reversing; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (upper.poset().leq(a, b) != lower.poset().leq(image[b], image[a])) {
        c.order_reversing = false;
        break;
      }
  return c;
}

std::optional<DualityVariant> select_duality(const NcUpper& upper, const NcLower& lower) {
  for (auto v : {DualityVariant::Quotient, DualityVariant::Reversed})
    if (check_duality(upper, lower, v).ok()) return v;
  return std::nullopt;
}

bool is_product_order_ideal(const NcLower& lower) {
  const FinitePoset& base = lower.nc().poset();
  const std::size_t k = static_cast<std::size_t>(lower.k());
  for (std::size_t x = 0; x < lower.size(); ++x) {
    const IndexTuple& d = lower.deltas(x);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t below : base.lower_covers(d[i])) {
        IndexTuple e = d;
        e[i] = static_cast<std::uint32_t>(below);
        const auto y = lower.index_of(e);
        if (!y || !lower.poset().leq(*y, x)) return false;
      }
    }
  }
  for (std::size_t a = 0; a < lower.size(); ++a)
    for (std::size_t b = 0; b < lower.size(); ++b) {
      bool prod = true;
      for (std::size_t i = 0; i < k && prod; ++i) prod = base.leq(lower.deltas(a)[i], lower.deltas(b)[i]);
      if (prod != lower.poset().leq(a, b)) return false;
    }
  return true;
}

FinitePoset theorem_poset_upper(const NcUpper& upper) { return adjoin_bottom(remove_minimals(upper.poset())); }

FinitePoset theorem_poset_lower(const NcLower& lower) { return adjoin_top(remove_maximals(lower.poset())); }

std::vector<IndexTuple> maximal_factorizations(const NCLattice& nc, int k, std::size_t max_elements) {
  check_k(k);
  const CoxeterSystem& W = nc.system();
  const int n = W.rank();
  const GroupElement gamma = W.coxeter_element();
  std::vector<IndexTuple> out;
  IndexTuple cur;
  std::function<void(GroupElement, int)> dfs = [&](GroupElement prefix, int len) {
    if (cur.size() == static_cast<std::size_t>(k)) {
      if (len == n && prefix == gamma) {
        out.push_back(cur);
        check_cap(out.size(), max_elements, "factorization list");
      }
      return;
    }
    for (std::size_t d = 0; d < nc.size(); ++d) {
      const int l = len + nc.rank_of(d);
      if (l > n) continue;
      const GroupElement p = W.multiply(prefix, nc.element(d));
      if (W.absolute_length(p) != l) continue;
      cur.push_back(static_cast<std::uint32_t>(d));
      dfs(p, l);
      cur.pop_back();
    }
  };
  dfs(W.identity(), 0);
  return out;
}

nlohmann::json delta_sequences_to_json(const NcLower& lower) {
  nlohmann::json seqs = nlohmann::json::array();
  for (std::size_t i = 0; i < lower.size(); ++i) {
    nlohmann::json s = nlohmann::json::array();
    for (auto x : lower.deltas(i)) s.push_back(lower.nc().poset().key(x));
    seqs.push_back(s);
  }
  return seqs;
}

}  // namespace ncp
