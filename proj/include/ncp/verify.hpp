#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncp/coxeter.hpp"
#include "ncp/kdiv.hpp"

namespace ncp {

/// Bumped whenever cached results could change.
inline constexpr const char* kCodeVersion = "1";

enum class Method { Recursion, Shelling, Both };

Method parse_method(std::string_view s);
std::string_view to_string(Method m) noexcept;

struct VerifyOptions {
  Method method = Method::Both;
  std::vector<int> gamma_perm;  // empty: canonical
  std::size_t max_elements = kDefaultElementCap;
};

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

struct VerificationReport {
  CoxeterType ctype;
  int k = 1;
  Method method = Method::Both;
  std::vector<int> gamma_perm;

  std::int64_t lhs_mobius_upper = 0;
  std::int64_t lhs_mobius_lower = 0;
  std::optional<std::int64_t> lhs_falling_chain;
  std::int64_t rhs_formula = 0;
  bool all_equal = false;

  // Shelling route details.
  std::optional<bool> el_base;            // natural labeling of NC(W)
  std::optional<bool> el_lex_abw;         // lex-ABW + theta on NC_(k) + 1hat
  std::optional<std::uint64_t> falling_chains;
  std::optional<std::uint64_t> falling_census;
  std::int64_t sum_mobius_maxs = 0;
  std::int64_t mobius_lower_top = 0;      // mu(NC_(k) + 1hat) by recursion
  std::string duality;                    // selected variant, or "none"
  std::vector<std::string> reflection_order;

  // mu(NC_(k) + 1hat) against +-Cat_+^(k-1).
  std::int64_t cat_plus_prev = 0;
  bool sign_n_minus_1 = false;  // (-1)^(n-1) Cat_+^(k-1)
  bool sign_n = false;          // (-1)^n Cat_+^(k-1)

  std::size_t nc_size = 0;
  std::size_t upper_size = 0;
  std::size_t lower_size = 0;
  std::int64_t fuss_catalan = 0;

  std::vector<StageTiming> timings;
  bool from_cache = false;

  /// True iff all_equal and every EL check that ran accepted.
  bool passed() const;
};

VerificationReport cmd_verify(const CoxeterType& ctype, int k, const VerifyOptions& options = {});

/// Deterministic fields only unless `with_timings`.
nlohmann::json to_json(const VerificationReport& r, bool with_timings = false);
VerificationReport report_from_json(const nlohmann::json& j);
std::string to_text(const VerificationReport& r, bool with_timings = false);

class ResultCache;

/// cmd_verify through the cache when one is given.
VerificationReport verify_cached(const CoxeterType& ctype, int k, const VerifyOptions& options, ResultCache* cache);

struct TableOptions {
  std::vector<Family> families;
  int max_rank = 4;
  int max_k = 3;
  int max_dihedral = 12;
  VerifyOptions verify;
};

struct TableCell {
  CoxeterType ctype;
  int k = 1;
  std::optional<VerificationReport> report;  // empty when skipped
  std::string skipped;                       // reason
};

/// Cells in family order, then rank (or m), then k. ScaleExceeded cells are
/// kept with a reason instead of a report.
std::vector<TableCell> cmd_table(const TableOptions& options, ResultCache* cache = nullptr);
std::string render_table(const std::vector<TableCell>& cells, std::string_view format);

}  // namespace ncp
