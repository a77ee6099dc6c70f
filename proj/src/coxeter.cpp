#include "ncp/coxeter.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "ncp/error.hpp"

namespace ncp {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::I2: return "I2";
    case Family::H3: return "H";
    case Family::F4: return "F";
  }
  return "?";
}

std::string CoxeterType::name() const {
  switch (family) {
    case Family::I2: return "I2(" + std::to_string(dihedral_order) + ")";
    case Family::H3: return "H3";
    case Family::F4: return "F4";
    default: return std::string(to_string(family)) + std::to_string(rank);
  }
}

void validate(const CoxeterType& ctype) {
  const int n = ctype.rank;
  switch (ctype.family) {
    case Family::A:
    case Family::B:
      if (n < 1) throw Error(ErrorKind::InvalidRank, ctype.name() + ": rank must be at least 1");
      return;
    case Family::D:
      if (n == 2 || n == 3)
        throw Error(ErrorKind::InvalidRank,
                    ctype.name() + " is not a separate type; use " + (n == 2 ? "A1 x A1" : "A3"));
      if (n < 4) throw Error(ErrorKind::InvalidRank, ctype.name() + ": rank must be at least 4");
      return;
    case Family::I2:
      if (n != 2) throw Error(ErrorKind::InvalidRank, "I2(m) has rank 2");
      if (ctype.dihedral_order < 3) throw Error(ErrorKind::InvalidRank, "I2(m) requires m >= 3");
      return;
    case Family::H3:
      if (n != 3) throw Error(ErrorKind::InvalidRank, "H3 has rank 3");
      return;
    case Family::F4:
      if (n != 4) throw Error(ErrorKind::InvalidRank, "F4 has rank 4");
      return;
  }
}

CoxeterType parse_coxeter_type(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty Coxeter type");
  const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  auto parse_int = [&](std::string_view digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorKind::InvalidArgument, "cannot parse Coxeter type '" + std::string(text) + "'");
    return std::stoi(std::string(digits));
  };
  if (fam == 'I') {
    // I2(m) or I2m is ambiguous; only the parenthesised form is accepted.
    const auto open = s.find('(');
    const auto close = s.find(')');
    if (s.rfind("I2(", 0) != 0 && s.rfind("i2(", 0) != 0)
      throw Error(ErrorKind::InvalidArgument, "dihedral types are written I2(m)");
    if (close == std::string::npos || close != s.size() - 1)
      throw Error(ErrorKind::InvalidArgument, "dihedral types are written I2(m)");
    CoxeterType t = CoxeterType::I2(parse_int(std::string_view(s).substr(open + 1, close - open - 1)));
    validate(t);
    return t;
  }
  const int n = parse_int(std::string_view(s).substr(1));
  CoxeterType t;
  switch (fam) {
    case 'A': t = CoxeterType::A(n); break;
    case 'B':
    case 'C': t = CoxeterType::B(n); break;
    case 'D': t = CoxeterType::D(n); break;
    case 'H':
      if (n == 3) {
        t = CoxeterType::H3();
        break;
      }
      throw Error(ErrorKind::UnsupportedType, "H" + std::to_string(n) + " is not supported");
    case 'F':
      if (n == 4) {
        t = CoxeterType::F4();
        break;
      }
      throw Error(ErrorKind::InvalidRank, "F" + std::to_string(n) + " does not exist; F4 has rank 4");
    case 'E':
    case 'G':
      throw Error(ErrorKind::UnsupportedType, s + " is not supported" + (fam == 'G' ? "; use I2(6)" : ""));
    default: throw Error(ErrorKind::UnsupportedType, "unknown family in '" + std::string(text) + "'");
  }
  validate(t);
  return t;
}

// ---------------------------------------------------------------------------
// Root systems

RootVector RootSystem::reflect(int simple, const RootVector& v) const {
  FieldElement coeff;
  for (Eigen::Index j = 0; j < v.size(); ++j) coeff += cartan(simple, j) * v(j);
  RootVector out = v;
  out(simple) -= coeff;
  return out;
}

namespace {

struct RootLess {
  bool operator()(const RootVector& a, const RootVector& b) const {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      const auto c = a(i) <=> b(i);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

RootMatrix cartan_matrix(const CoxeterType& t, std::shared_ptr<const RealCyclotomicField>& field) {
  const int n = t.rank;
  RootMatrix a(n, n);
  a.setConstant(FieldElement(0));
  for (int i = 0; i < n; ++i) a(i, i) = FieldElement(2);
  auto link = [&](int i, int j, FieldElement aij, FieldElement aji) {
    a(i, j) = std::move(aij);
    a(j, i) = std::move(aji);
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case Family::B:
      // alpha_{n-1} is the short root e_n.
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      if (n >= 2) link(n - 2, n - 1, -1, -2);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case Family::I2: {
      field = std::make_shared<const RealCyclotomicField>(t.dihedral_order);
      const FieldElement c = FieldElement::generator(field);
      link(0, 1, -c, -c);
      break;
    }
    case Family::H3: {
      field = std::make_shared<const RealCyclotomicField>(5);
      const FieldElement tau = FieldElement::generator(field);
      link(0, 1, -tau, -tau);
      link(1, 2, -1, -1);
      break;
    }
    case Family::F4:
      link(0, 1, -1, -1);
      link(1, 2, -1, -2);
      link(2, 3, -1, -1);
      break;
  }
  if (field && field->degree() == 1) field.reset();
  return a;
}

}  // namespace

RootSystem build_root_system(const CoxeterType& ctype) {
  validate(ctype);
  RootSystem rs;
  rs.cartan = cartan_matrix(ctype, rs.field);
  const int n = ctype.rank;
  std::map<RootVector, int, RootLess> seen;
  std::vector<RootVector> positive;
  for (int i = 0; i < n; ++i) {
    RootVector v(n);
    v.setConstant(FieldElement(0));
    v(i) = FieldElement(1);
    seen.emplace(v, i);
    positive.push_back(std::move(v));
  }
  // Every non-simple positive root is s_i of a positive root of smaller height.
  for (std::size_t q = 0; q < positive.size(); ++q) {
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(q) == i) continue;
      RootVector img = rs.reflect(i, positive[q]);
      if (seen.count(img)) continue;
      seen.emplace(img, static_cast<int>(positive.size()));
      positive.push_back(std::move(img));
      if (positive.size() > 5000) throw Error(ErrorKind::UnsupportedType, ctype.name() + " is not finite");
    }
  }
  rs.num_positive = static_cast<int>(positive.size());
  rs.roots = positive;
  for (const auto& v : positive) rs.roots.push_back(-v);
  return rs;
}

// ---------------------------------------------------------------------------
// CoxeterSystem

namespace {

std::atomic<std::uint32_t> next_tag{1};

std::u16string compose(std::u16string_view a, std::u16string_view b) {
  std::u16string out(b.size(), u'\0');
  for (std::size_t r = 0; r < b.size(); ++r) out[r] = a[b[r]];
  return out;
}

long long as_integer(const FieldElement& x) {
  const Rational q = x.rational_value();
  if (!x.is_rational() || denominator(q) != 1)
    throw Error(ErrorKind::InvalidArgument, "expected an integral root coordinate");
  return numerator(q).convert_to<long long>();
}

}  // namespace

std::shared_ptr<const CoxeterSystem> CoxeterSystem::build(const CoxeterType& ctype, BuildOptions options) {
  validate(ctype);
  auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
  sys->type_ = ctype;
  sys->tag_ = next_tag.fetch_add(1);
  sys->roots_ = build_root_system(ctype);
  const RootSystem& rs = sys->roots_;
  const int n = ctype.rank;
  const int degree = static_cast<int>(rs.roots.size());
  sys->degree_ = degree;

  std::vector<int> order = options.generator_order;
  if (order.empty()) {
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
  }
  {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(static_cast<std::size_t>(n));
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect)
      throw Error(ErrorKind::InvalidArgument, "generator order must be a permutation of 0.." + std::to_string(n - 1));
  }
  sys->generator_order_ = order;

  std::map<RootVector, int, RootLess> root_index;
  for (int r = 0; r < degree; ++r) root_index.emplace(rs.roots[static_cast<std::size_t>(r)], r);

  std::vector<std::u16string> gens;
  for (int i = 0; i < n; ++i) {
    std::u16string p(static_cast<std::size_t>(degree), u'\0');
    for (int r = 0; r < degree; ++r) {
      auto it = root_index.find(rs.reflect(i, rs.roots[static_cast<std::size_t>(r)]));
      if (it == root_index.end()) throw Error(ErrorKind::UnsupportedType, "root system is not closed");
      p[static_cast<std::size_t>(r)] = static_cast<char16_t>(it->second);
    }
    gens.push_back(std::move(p));
  }

  std::u16string id(static_cast<std::size_t>(degree), u'\0');
  for (int r = 0; r < degree; ++r) id[static_cast<std::size_t>(r)] = static_cast<char16_t>(r);
  std::vector<std::u16string> all{id};
  std::unordered_map<std::u16string, std::uint32_t> seen{{id, 0}};
  for (std::size_t q = 0; q < all.size(); ++q) {
    for (const auto& g : gens) {
      std::u16string next = compose(all[q], g);
      if (seen.count(next)) continue;
      seen.emplace(next, 0);
      all.push_back(std::move(next));
      if (all.size() > options.max_group_order)
        throw Error(ErrorKind::ScaleExceeded, ctype.name() + " has more than " +
                                                   std::to_string(options.max_group_order) + " elements");
    }
  }
  std::sort(all.begin(), all.end());
  const std::size_t size = all.size();
  sys->perms_.reserve(size * static_cast<std::size_t>(degree));
  for (std::uint32_t i = 0; i < size; ++i) {
    sys->perms_ += all[i];
    sys->index_of_.emplace(all[i], i);
    sys->elements_.push_back(GroupElement(sys->tag_, i));
  }

  sys->inverse_.resize(size);
  for (std::uint32_t i = 0; i < size; ++i) {
    std::u16string inv(static_cast<std::size_t>(degree), u'\0');
    for (int r = 0; r < degree; ++r) inv[all[i][static_cast<std::size_t>(r)]] = static_cast<char16_t>(r);
    sys->inverse_[i] = sys->lookup(inv);
  }

  for (int i : order) sys->simple_.push_back(GroupElement(sys->tag_, sys->lookup(gens[static_cast<std::size_t>(i)])));
  sys->coxeter_element_ = sys->product(sys->simple_);

  std::vector<std::uint32_t> refl;
  for (std::uint32_t w = 0; w < size; ++w) {
    for (const auto& s : sys->simple_) {
      const GroupElement c = sys->multiply(sys->multiply(GroupElement(sys->tag_, w), s),
                                           GroupElement(sys->tag_, sys->inverse_[w]));
      refl.push_back(c.index());
    }
  }
  std::sort(refl.begin(), refl.end());
  refl.erase(std::unique(refl.begin(), refl.end()), refl.end());
  sys->reflection_pos_.assign(size, -1);
  sys->reflection_root_.assign(size, -1);
  for (std::size_t p = 0; p < refl.size(); ++p) {
    const std::uint32_t t = refl[p];
    sys->reflections_.push_back(GroupElement(sys->tag_, t));
    sys->reflection_pos_[t] = static_cast<int>(p);
    const std::u16string_view perm = std::u16string_view(sys->perms_).substr(t * static_cast<std::size_t>(degree), static_cast<std::size_t>(degree));
    for (int b = 0; b < rs.num_positive; ++b)
      if (perm[static_cast<std::size_t>(b)] == rs.negation(b)) {
        sys->reflection_root_[t] = b;
        break;
      }
  }

  // Absolute length: breadth-first search over right multiplication by T.
  constexpr std::uint8_t unseen = 0xff;
  sys->absolute_length_.assign(size, unseen);
  sys->absolute_length_[0] = 0;
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const std::uint32_t w = queue.front();
    queue.pop_front();
    for (const auto& t : sys->reflections_) {
      const std::uint32_t wt = sys->multiply(GroupElement(sys->tag_, w), t).index();
      if (sys->absolute_length_[wt] != unseen) continue;
      sys->absolute_length_[wt] = static_cast<std::uint8_t>(sys->absolute_length_[w] + 1);
      queue.push_back(wt);
    }
  }

  if (ctype.family == Family::I2) {
    // Canonical generators s (label 0) and r = s_0 s_1.
    const GroupElement s(sys->tag_, sys->lookup(gens[0]));
    const GroupElement r = sys->multiply(s, GroupElement(sys->tag_, sys->lookup(gens[1])));
    sys->dihedral_names_.assign(size, "");
    GroupElement power = sys->identity();
    for (int a = 0; a < ctype.dihedral_order; ++a) {
      const std::string base = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
      sys->dihedral_names_[power.index()] = a == 0 ? "e" : base;
      sys->dihedral_names_[sys->multiply(power, s).index()] = a == 0 ? "s" : base + " s";
      power = sys->multiply(power, r);
    }
  }
  return sys;
}

std::uint32_t CoxeterSystem::lookup(std::u16string_view perm) const {
  auto it = index_of_.find(std::u16string(perm));
  if (it == index_of_.end()) throw Error(ErrorKind::InvalidArgument, "permutation is not a group element");
  return it->second;
}

void CoxeterSystem::check(GroupElement w) const {
  if (!owns(w)) throw Error(ErrorKind::MixedSystems, "element does not belong to " + type_.name());
}

GroupElement CoxeterSystem::element(std::size_t index) const {
  if (index >= order()) throw Error(ErrorKind::InvalidArgument, "element index out of range");
  return elements_[index];
}

std::u16string_view CoxeterSystem::permutation(GroupElement w) const {
  check(w);
  return std::u16string_view(perms_).substr(w.index() * static_cast<std::size_t>(degree_), static_cast<std::size_t>(degree_));
}

GroupElement CoxeterSystem::multiply(GroupElement a, GroupElement b) const {
  check(a);
  check(b);
  if (a.index() == 0) return b;
  if (b.index() == 0) return a;
  return GroupElement(tag_, lookup(compose(permutation(a), permutation(b))));
}

GroupElement CoxeterSystem::inverse(GroupElement a) const {
  check(a);
  return GroupElement(tag_, inverse_[a.index()]);
}

GroupElement CoxeterSystem::product(std::span<const GroupElement> word) const {
  GroupElement out = identity();
  for (const auto& w : word) out = multiply(out, w);
  return out;
}

int CoxeterSystem::absolute_length(GroupElement w) const {
  check(w);
  return absolute_length_[w.index()];
}

bool CoxeterSystem::absolute_leq(GroupElement pi, GroupElement sigma) const {
  return absolute_length(sigma) == absolute_length(pi) + absolute_length(multiply(inverse(pi), sigma));
}

int CoxeterSystem::coxeter_length(GroupElement w) const {
  const auto perm = permutation(w);
  int len = 0;
  for (int r = 0; r < roots_.num_positive; ++r)
    if (perm[static_cast<std::size_t>(r)] >= roots_.num_positive) ++len;
  return len;
}

bool CoxeterSystem::is_reflection(GroupElement w) const { return reflection_index(w) >= 0; }

int CoxeterSystem::reflection_index(GroupElement w) const {
  check(w);
  return reflection_pos_[w.index()];
}

int CoxeterSystem::reflection_root(GroupElement t) const {
  check(t);
  const int r = reflection_root_[t.index()];
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "element is not a reflection");
  return r;
}

RootMatrix CoxeterSystem::matrix(GroupElement w) const {
  const auto perm = permutation(w);
  const int n = rank();
  RootMatrix m(n, n);
  for (int j = 0; j < n; ++j) m.col(j) = roots_.roots[perm[static_cast<std::size_t>(j)]];
  return m;
}

std::string CoxeterSystem::render(GroupElement w) const {
  check(w);
  if (w.index() == 0) return "e";
  switch (type_.family) {
    case Family::A: return render_type_a(w.index());
    case Family::B:
    case Family::D: return render_signed(w.index());
    case Family::I2: return dihedral_names_[w.index()];
    case Family::H3:
    case Family::F4: break;
  }
  if (const int r = reflection_root_[w.index()]; r >= 0) {
    std::string out = "s[";
    const RootVector& v = roots_.roots[static_cast<std::size_t>(r)];
    for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + v(i).to_string();
    return out + "]";
  }
  return render_matrix(w.index());
}

std::string CoxeterSystem::render_type_a(std::uint32_t w) const {
  // alpha_i = e_i - e_{i+1}; a root with coordinates c is e_a - e_b for the
  // first index a of its support and b one past the last.
  const int n = rank();
  const auto perm = permutation(elements_[w]);
  std::vector<int> sigma(static_cast<std::size_t>(n + 1), -1);
  for (int i = 0; i < n; ++i) {
    const RootVector& v = roots_.roots[perm[static_cast<std::size_t>(i)]];
    std::vector<long long> e(static_cast<std::size_t>(n + 1), 0);
    for (int j = 0; j < n; ++j) {
      const long long c = as_integer(v(j));
      e[static_cast<std::size_t>(j)] += c;
      e[static_cast<std::size_t>(j + 1)] -= c;
    }
    for (int p = 0; p <= n; ++p) {
      if (e[static_cast<std::size_t>(p)] == 1) sigma[static_cast<std::size_t>(i)] = p;
      if (e[static_cast<std::size_t>(p)] == -1) sigma[static_cast<std::size_t>(i + 1)] = p;
    }
  }
  std::string out;
  std::vector<bool> done(sigma.size(), false);
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (done[start] || sigma[start] == static_cast<int>(start)) continue;
    out += "(";
    std::size_t p = start;
    bool first = true;
    while (!done[p]) {
      done[p] = true;
      out += (first ? "" : " ") + std::to_string(p + 1);
      first = false;
      p = static_cast<std::size_t>(sigma[p]);
    }
    out += ")";
  }
  return out;
}

std::string CoxeterSystem::render_signed(std::uint32_t w) const {
  const int n = rank();
  const bool type_d = type_.family == Family::D;
  const auto perm = permutation(elements_[w]);
  auto image = [&](int j) {
    // w(alpha_j) in the e-basis.
    const RootVector& v = roots_.roots[perm[static_cast<std::size_t>(j)]];
    std::vector<long long> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      const long long c = as_integer(v(i));
      if (i + 1 < n) {
        e[static_cast<std::size_t>(i)] += c;
        e[static_cast<std::size_t>(i + 1)] -= c;
      } else if (type_d) {
        e[static_cast<std::size_t>(n - 2)] += c;
        e[static_cast<std::size_t>(n - 1)] += c;
      } else {
        e[static_cast<std::size_t>(n - 1)] += c;
      }
    }
    return e;
  };
  // w(e_{n-1}) first, then e_i = alpha_i + e_{i+1}.
  std::vector<std::vector<long long>> img(static_cast<std::size_t>(n));
  if (type_d) {
    auto a = image(n - 1), b = image(n - 2);
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = (a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]) / 2;
    img[static_cast<std::size_t>(n - 1)] = a;
  } else {
    img[static_cast<std::size_t>(n - 1)] = image(n - 1);
  }
  for (int i = n - 2; i >= 0; --i) {
    auto a = image(i);
    for (int p = 0; p < n; ++p) a[static_cast<std::size_t>(p)] += img[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(p)];
    img[static_cast<std::size_t>(i)] = a;
  }
  std::string out = "[";
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < n; ++p) {
      const long long c = img[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
      if (c != 0) out += (i ? "," : "") + std::to_string(c * (p + 1));
    }
  }
  return out + "]";
}

std::string CoxeterSystem::render_matrix(std::uint32_t w) const {
  const RootMatrix m = matrix(elements_[w]);
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) out += (j ? "," : "") + m(i, j).to_string();
    out += "]";
  }
  return out + "]";
}

}  // namespace ncp
