#include "ncp/verify.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "ncp/cache.hpp"
#include "ncp/catalan.hpp"
#include "ncp/error.hpp"
#include "ncp/nc.hpp"
#include "ncp/shelling.hpp"

namespace ncp {

Method parse_method(std::string_view s) {
  if (s == "recursion") return Method::Recursion;
  if (s == "shelling") return Method::Shelling;
  if (s == "both") return Method::Both;
  throw Error(ErrorKind::InvalidArgument, "unknown method '" + std::string(s) + "' (recursion, shelling, both)");
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Recursion: return "recursion";
    case Method::Shelling: return "shelling";
    case Method::Both: return "both";
  }
  return "both";
}

bool VerificationReport::passed() const {
  return all_equal && el_base.value_or(true) && el_lex_abw.value_or(true);
}

namespace {

std::int64_t sign(int e) { return e % 2 == 0 ? 1 : -1; }

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<StageTiming>& out) : out_(out), last_(std::chrono::steady_clock::now()) {}
  void lap(const char* stage) {
    const auto now = std::chrono::steady_clock::now();
    out_.push_back({stage, std::chrono::duration<double>(now - last_).count()});
    last_ = now;
  }

 private:
  std::vector<StageTiming>& out_;
  std::chrono::steady_clock::time_point last_;
};

nlohmann::json mobius_table(const FinitePoset& p) {
  const auto b = p.bottom();
  return b ? nlohmann::json(mobius_from(p, *b)) : nlohmann::json(nullptr);
}

VerificationReport verify_impl(const CoxeterType& ctype, int k, const VerifyOptions& options, nlohmann::json* artifacts) {
  validate(ctype);
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be a positive integer");
  VerificationReport r;
  r.ctype = ctype;
  r.k = k;
  r.method = options.method;
  r.gamma_perm = options.gamma_perm;
  Stopwatch clock(r.timings);
  const int n = ctype.rank;

  BuildOptions bo;
  bo.generator_order = options.gamma_perm;
  auto W = CoxeterSystem::build(ctype, bo);
  clock.lap("group");
  auto nc = NCLattice::build(W);
  r.nc_size = nc->size();
  clock.lap("nc");

  KdivOptions ko;
  ko.max_elements = options.max_elements;
  auto upper = build_nc_upper(nc, k, ko);
  auto lower = build_nc_lower(nc, k, ko);
  r.upper_size = upper->size();
  r.lower_size = lower->size();
  r.fuss_catalan = fuss_catalan(ctype, k);
  const auto dual = select_duality(*upper, *lower);
  r.duality = dual ? std::string(to_string(*dual)) : "none";
  clock.lap("kdiv");

  const FinitePoset up_thm = theorem_poset_upper(*upper);
  const FinitePoset low_thm = theorem_poset_lower(*lower);
  r.lhs_mobius_upper = mobius_number(up_thm);
  r.lhs_mobius_lower = mobius_number(low_thm);
  const FinitePoset low_top = with_top(*lower);
  r.mobius_lower_top = mobius_number(low_top);
  r.sum_mobius_maxs = sum_mobius_to_maxs(lower->poset());
  clock.lap("mobius");

  r.rhs_formula = sign(n) * (positive_fuss_catalan(ctype, k) - positive_fuss_catalan(ctype, k - 1));
  r.cat_plus_prev = positive_fuss_catalan(ctype, k - 1);
  r.sign_n_minus_1 = r.mobius_lower_top == sign(n - 1) * r.cat_plus_prev;
  r.sign_n = r.mobius_lower_top == sign(n) * r.cat_plus_prev;

  if (options.method != Method::Recursion) {
    const ReflectionOrder order = find_el_reflection_order(*nc);
    for (GroupElement t : order.reflections()) r.reflection_order.push_back(W->render(t));
    r.el_base = is_el_labeling(nc->poset(), natural_labeling(*nc, order)).ok;
    const EdgeLabeling lab = lex_abw_labeling(*lower, low_top, order);
    r.el_lex_abw = is_el_labeling(low_top, lab).ok;
    const std::uint64_t falling = count_falling_maximal_chains(low_top, lab);
    r.falling_chains = falling;
    r.falling_census = falling_chain_decomposition_census(*lower, order).total;
    r.lhs_falling_chain = sign(*low_top.rank()) * static_cast<std::int64_t>(falling) + r.sum_mobius_maxs;
    clock.lap("shelling");
  }

  r.all_equal = r.lhs_mobius_upper == r.rhs_formula && r.lhs_mobius_lower == r.rhs_formula &&
                (!r.lhs_falling_chain || *r.lhs_falling_chain == r.rhs_formula);

  if (artifacts) {
    *artifacts = {{"theorem_upper", to_json(up_thm)},
                  {"theorem_lower", to_json(low_thm)},
                  {"mobius_upper", mobius_table(up_thm)},
                  {"mobius_lower", mobius_table(low_thm)}};
  }
  return r;
}

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> opt_get(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string cache_key(const CoxeterType& ctype, int k, const VerifyOptions& o) {
  std::string key = std::string(to_string(ctype.family)) + std::to_string(ctype.rank);
  if (ctype.family == Family::I2) key += "m" + std::to_string(ctype.dihedral_order);
  key += "_k" + std::to_string(k) + "_" + std::string(to_string(o.method)) + "_g";
  for (std::size_t i = 0; i < o.gamma_perm.size(); ++i) key += (i ? "-" : "") + std::to_string(o.gamma_perm[i]);
  return key + "_v" + kCodeVersion;
}

}  // namespace

VerificationReport cmd_verify(const CoxeterType& ctype, int k, const VerifyOptions& options) {
  return verify_impl(ctype, k, options, nullptr);
}

VerificationReport verify_cached(const CoxeterType& ctype, int k, const VerifyOptions& options, ResultCache* cache) {
  if (!cache) return cmd_verify(ctype, k, options);
  validate(ctype);
  const std::string key = cache_key(ctype, k, options);
  const auto t0 = std::chrono::steady_clock::now();
  if (auto payload = cache->load(key)) {
    try {
      VerificationReport r = report_from_json(payload->at("report"));
      r.from_cache = true;
      r.timings = {{"cache", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
      return r;
    } catch (const std::exception&) {
      // fall through and recompute
    }
  }
  nlohmann::json artifacts;
  VerificationReport r = verify_impl(ctype, k, options, &artifacts);
  artifacts["report"] = to_json(r);
  cache->store(key, artifacts);
  return r;
}

nlohmann::json to_json(const VerificationReport& r, bool with_timings) {
  nlohmann::json j = {
      {"type", r.ctype.name()},
      {"family", std::string(to_string(r.ctype.family))},
      {"rank", r.ctype.rank},
      {"m", r.ctype.family == Family::I2 ? nlohmann::json(r.ctype.dihedral_order) : nlohmann::json(nullptr)},
      {"k", r.k},
      {"method", std::string(to_string(r.method))},
      {"gamma_perm", r.gamma_perm},
      {"lhs_mobius_upper", r.lhs_mobius_upper},
      {"lhs_mobius_lower", r.lhs_mobius_lower},
      {"lhs_falling_chain", opt(r.lhs_falling_chain)},
      {"rhs_formula", r.rhs_formula},
      {"all_equal", r.all_equal},
      {"pass", r.passed()},
      {"el_base", opt(r.el_base)},
      {"el_lex_abw", opt(r.el_lex_abw)},
      {"falling_chains", opt(r.falling_chains)},
      {"falling_census", opt(r.falling_census)},
      {"sum_mobius_to_maxs", r.sum_mobius_maxs},
      {"mobius_lower_with_top", r.mobius_lower_top},
      {"sign_check",
       {{"cat_plus_prev", r.cat_plus_prev}, {"(-1)^(n-1)", r.sign_n_minus_1}, {"(-1)^n", r.sign_n}}},
      {"duality", r.duality},
      {"reflection_order", r.reflection_order},
      {"sizes",
       {{"nc", r.nc_size}, {"upper", r.upper_size}, {"lower", r.lower_size}, {"fuss_catalan", r.fuss_catalan}}},
  };
  if (with_timings) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& s : r.timings) t[s.stage] = s.seconds;
    j["timings"] = t;
    j["cached"] = r.from_cache;
  }
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.ctype = parse_coxeter_type(j.at("type").get<std::string>());
  r.k = j.at("k").get<int>();
  r.method = parse_method(j.at("method").get<std::string>());
  r.gamma_perm = j.at("gamma_perm").get<std::vector<int>>();
  r.lhs_mobius_upper = j.at("lhs_mobius_upper").get<std::int64_t>();
  r.lhs_mobius_lower = j.at("lhs_mobius_lower").get<std::int64_t>();
  r.lhs_falling_chain = opt_get<std::int64_t>(j, "lhs_falling_chain");
  r.rhs_formula = j.at("rhs_formula").get<std::int64_t>();
  r.all_equal = j.at("all_equal").get<bool>();
  r.el_base = opt_get<bool>(j, "el_base");
  r.el_lex_abw = opt_get<bool>(j, "el_lex_abw");
  r.falling_chains = opt_get<std::uint64_t>(j, "falling_chains");
  r.falling_census = opt_get<std::uint64_t>(j, "falling_census");
  r.sum_mobius_maxs = j.at("sum_mobius_to_maxs").get<std::int64_t>();
  r.mobius_lower_top = j.at("mobius_lower_with_top").get<std::int64_t>();
  const auto& s = j.at("sign_check");
  r.cat_plus_prev = s.at("cat_plus_prev").get<std::int64_t>();
  r.sign_n_minus_1 = s.at("(-1)^(n-1)").get<bool>();
  r.sign_n = s.at("(-1)^n").get<bool>();
  r.duality = j.at("duality").get<std::string>();
  r.reflection_order = j.at("reflection_order").get<std::vector<std::string>>();
  const auto& z = j.at("sizes");
  r.nc_size = z.at("nc").get<std::size_t>();
  r.upper_size = z.at("upper").get<std::size_t>();
  r.lower_size = z.at("lower").get<std::size_t>();
  r.fuss_catalan = z.at("fuss_catalan").get<std::int64_t>();
  return r;
}

std::string to_text(const VerificationReport& r, bool with_timings) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << r.ctype.name() << ", k = " << r.k << " (method " << to_string(r.method) << ")\n";
  os << "  |NC| = " << r.nc_size << ", |NC^(k)| = " << r.upper_size << ", |NC_(k)| = " << r.lower_size
     << ", Cat^(k) = " << r.fuss_catalan << '\n';
  os << "  mu upper (recursion)   " << r.lhs_mobius_upper << '\n';
  os << "  mu lower (recursion)   " << r.lhs_mobius_lower << '\n';
  if (r.lhs_falling_chain) {
    os << "  mu via falling chains  " << *r.lhs_falling_chain << "  (" << *r.falling_chains << " falling chains, census "
       << *r.falling_census << ")\n";
    os << "  EL: NC " << yn(*r.el_base) << ", NC_(k)+1hat " << yn(*r.el_lex_abw) << '\n';
  }
  os << "  formula                " << r.rhs_formula << '\n';
  os << "  mu(NC_(k)+1hat) = " << r.mobius_lower_top << "; matches (-1)^(n-1) Cat+^(k-1): " << yn(r.sign_n_minus_1)
     << ", (-1)^n Cat+^(k-1): " << yn(r.sign_n) << '\n';
  os << "  duality " << r.duality << '\n';
  if (with_timings) {
    os << "  timings:";
    for (const auto& s : r.timings) os << ' ' << s.stage << '=' << std::fixed << std::setprecision(4) << s.seconds << 's';
    if (r.from_cache) os << " (cached)";
    os << '\n';
  }
  os << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::vector<TableCell> cmd_table(const TableOptions& options, ResultCache* cache) {
  std::vector<CoxeterType> types;
  for (Family f : options.families) {
    switch (f) {
      case Family::A:
        for (int n = 1; n <= options.max_rank; ++n) types.push_back(CoxeterType::A(n));
        break;
      case Family::B:
        for (int n = 2; n <= options.max_rank; ++n) types.push_back(CoxeterType::B(n));
        break;
      case Family::D:
        for (int n = 4; n <= options.max_rank; ++n) types.push_back(CoxeterType::D(n));
        break;
      case Family::I2:
        if (options.max_rank >= 2)
          for (int m = 3; m <= options.max_dihedral; ++m) types.push_back(CoxeterType::I2(m));
        break;
      case Family::H3:
        if (options.max_rank >= 3) types.push_back(CoxeterType::H3());
        break;
      case Family::F4:
        if (options.max_rank >= 4) types.push_back(CoxeterType::F4());
        break;
    }
  }
  std::vector<TableCell> cells;
  for (const auto& t : types) {
    for (int k = 1; k <= options.max_k; ++k) {
      TableCell c{t, k, std::nullopt, {}};
      try {
        VerifyOptions vo = options.verify;
        if (!vo.gamma_perm.empty() && vo.gamma_perm.size() != static_cast<std::size_t>(t.rank)) vo.gamma_perm.clear();
        c.report = verify_cached(t, k, vo, cache);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ScaleExceeded) throw;
        c.skipped = e.what();
      }
      cells.push_back(std::move(c));
    }
  }
  return cells;
}

std::string render_table(const std::vector<TableCell>& cells, std::string_view format) {
  std::ostringstream os;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cells) {
      if (c.report)
        arr.push_back(to_json(*c.report));
      else
        arr.push_back({{"type", c.ctype.name()}, {"k", c.k}, {"skipped", c.skipped}});
    }
    os << arr.dump(2) << '\n';
    return os.str();
  }
  const std::vector<std::string> header = {"family", "rank", "k", "lhs", "rhs", "pass",
                                           "m", "lhs_lower", "lhs_falling", "el", "elements"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : cells) {
    std::vector<std::string> row = {std::string(to_string(c.ctype.family)), std::to_string(c.ctype.rank),
                                    std::to_string(c.k)};
    const std::string m = c.ctype.family == Family::I2 ? std::to_string(c.ctype.dihedral_order) : "";
    if (!c.report) {
      row.insert(row.end(), {"", "", "skipped", m, "", "", "", ""});
    } else {
      const auto& r = *c.report;
      const std::string el = r.el_base ? ((*r.el_base && *r.el_lex_abw) ? "yes" : "no") : "";
      row.insert(row.end(), {std::to_string(r.lhs_mobius_upper), std::to_string(r.rhs_formula),
                             r.passed() ? "yes" : "no", m, std::to_string(r.lhs_mobius_lower),
                             r.lhs_falling_chain ? std::to_string(*r.lhs_falling_chain) : "", el,
                             std::to_string(r.upper_size)});
    }
    rows.push_back(std::move(row));
  }
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& v) {
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
  }
  if (format != "text") throw Error(ErrorKind::InvalidArgument, "unknown table format '" + std::string(format) + "'");
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += "  ";
      s += v[i] + std::string(width[i] - v[i].size(), ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    os << s << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

}  // namespace ncp
