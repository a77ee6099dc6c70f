// Acceptance suite: one PASS/FAIL line per criterion over the reference grid.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ncp/catalan.hpp"
#include "ncp/error.hpp"
#include "ncp/kdiv.hpp"
#include "ncp/labeling.hpp"
#include "ncp/nc.hpp"
#include "ncp/poset.hpp"
#include "ncp/shelling.hpp"
#include "ncp/verify.hpp"
#include "support/oracles.hpp"

using namespace ncp;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::int64_t sign(int n) { return n % 2 == 0 ? 1 : -1; }

struct Criterion {
  std::string title;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

std::vector<CoxeterType> grid_groups() {
  std::vector<CoxeterType> g = {CoxeterType::A(1), CoxeterType::A(2), CoxeterType::A(3), CoxeterType::A(4),
                                CoxeterType::B(2), CoxeterType::B(3), CoxeterType::D(4)};
  for (int m = 3; m <= 12; ++m) g.push_back(CoxeterType::I2(m));
  g.push_back(CoxeterType::H3());
  return g;
}

constexpr int kMaxK = 3;
constexpr int kRandomPosets = 1000;

std::string label(const CoxeterType& t, int k) { return t.name() + " k=" + std::to_string(k); }

}  // namespace

int main() {
  std::vector<Criterion> c(7);
  c[0].title = "theorem reproduction";
  c[1].title = "max-deletion lemma";
  c[2].title = "factorization Mobius sums";
  c[3].title = "EL-shellability";
  c[4].title = "falling-chain Mobius rule";
  c[5].title = "counting oracles";
  c[6].title = "cross-oracle group and Mobius checks";

  auto hall = [&](const FinitePoset& p, const std::string& what) {
    const auto t0 = Clock::now();
    c[6].expect(mobius_by_hall(p) == mobius_number(p), "Hall vs recursion: " + what);
    c[6].seconds += since(t0);
  };

  double small_worst = 0;
  std::string small_worst_case;

  for (const CoxeterType& t : grid_groups()) {
    try {
      const int n = t.rank;
      auto W = CoxeterSystem::build(t);
      auto nc = NCLattice::build(W);

      auto t0 = Clock::now();
      for (GroupElement w : W->elements())
        c[6].expect(W->absolute_length(w) == testing::fixed_space_codimension(*W, w),
                    "absolute length of " + W->render(w) + " in " + t.name());
      c[6].seconds += since(t0);
      hall(nc->poset(), "NC(" + t.name() + ")");

      t0 = Clock::now();
      for (int j = 1; j <= kMaxK; ++j)
        c[2].expect(factorization_mobius_sum(*nc, j) == sign(n) * positive_fuss_catalan(t, j), label(t, j));
      c[2].seconds += since(t0);

      t0 = Clock::now();
      const ReflectionOrder order = find_el_reflection_order(*nc);
      const EdgeLabeling natural = natural_labeling(*nc, order);
      c[3].expect(is_el_labeling(nc->poset(), natural).ok, "natural labeling of NC(" + t.name() + ")");
      c[3].seconds += since(t0);

      t0 = Clock::now();
      const int nc_rank = nc->poset().length();
      c[4].expect(sign(nc_rank) * static_cast<std::int64_t>(count_falling_maximal_chains(nc->poset(), natural)) ==
                      mobius_number(nc->poset()),
                  "NC(" + t.name() + ")");
      c[4].seconds += since(t0);

      for (int k = 1; k <= kMaxK; ++k) {
        t0 = Clock::now();
        const auto r = cmd_verify(t, k);
        const double dt = since(t0);
        c[0].seconds += dt;
        c[0].expect(r.all_equal, label(t, k));
        if ((t.family == Family::A && t.rank <= 3) && dt > small_worst) {
          small_worst = dt;
          small_worst_case = label(t, k);
        }

        auto upper = build_nc_upper(nc, k);
        auto lower = build_nc_lower(nc, k);
        const FinitePoset& P = lower->poset();

        t0 = Clock::now();
        const LemmaCheck lc = lemma_maxs_deletion_check(P);
        c[1].expect(lc.equal, label(t, k) + ": " + std::to_string(lc.lhs) + " vs " + std::to_string(lc.rhs));
        c[1].seconds += since(t0);

        t0 = Clock::now();
        c[5].expect(upper->size() == static_cast<std::size_t>(fuss_catalan(t, k)), "|NC^(k)| for " + label(t, k));
        c[5].expect(sign(n) * sum_mobius_to_maxs(P) == positive_fuss_catalan(t, k), "sum over maxs for " + label(t, k));
        c[5].seconds += since(t0);

        t0 = Clock::now();
        const FinitePoset top = with_top(*lower);
        const EdgeLabeling lex = lex_abw_labeling(*lower, top, order);
        const bool el = is_el_labeling(top, lex).ok;
        c[3].expect(el, "lex-ABW labeling of NC_(k) + 1hat for " + label(t, k));
        c[3].seconds += since(t0);

        t0 = Clock::now();
        const std::int64_t mu_top = mobius_number(top);
        c[4].expect(sign(top.length()) * static_cast<std::int64_t>(count_falling_maximal_chains(top, lex)) == mu_top,
                    "NC_(k) + 1hat for " + label(t, k));
        const FirstBlockCheck fb = check_falling_first_block(*lower, top, lex);
        c[4].expect(fb.violations == 0, "delta_1 = e on falling chains for " + label(t, k));
        c[4].seconds += since(t0);

        hall(top, "NC_(k) + 1hat for " + label(t, k));
        hall(adjoin_top(remove_maximals(P)), "NC_(k) minus maxs + 1hat for " + label(t, k));
        hall(theorem_poset_upper(*upper), "NC^(k) minus mins + 0hat for " + label(t, k));
        hall(theorem_poset_lower(*lower), "NC_(k) minus maxs + 1hat (dual) for " + label(t, k));
      }
    } catch (const std::exception& e) {
      for (auto& cr : c) cr.expect(false, t.name() + ": " + e.what());
    }
  }

  // Random graded posets for the lemma; each also feeds the Hall comparison.
  {
    std::mt19937 rng(20240611);
    for (int i = 0; i < kRandomPosets; ++i) {
      const FinitePoset p = testing::random_graded_poset(rng, 40);
      const auto t0 = Clock::now();
      try {
        const LemmaCheck lc = lemma_maxs_deletion_check(p);
        c[1].expect(lc.equal, "random poset " + std::to_string(i));
      } catch (const std::exception& e) {
        c[1].expect(false, "random poset " + std::to_string(i) + ": " + e.what());
      }
      c[1].seconds += since(t0);
      hall(adjoin_top(p), "random poset " + std::to_string(i) + " + 1hat");
      hall(adjoin_top(remove_maximals(p)), "random poset " + std::to_string(i) + " minus maxs + 1hat");
    }
  }

  // Spot values, each by enumeration.
  try {
    auto nc_a2 = NCLattice::build(CoxeterSystem::build(CoxeterType::A(2)));
    auto nc_a3 = NCLattice::build(CoxeterSystem::build(CoxeterType::A(3)));
    c[5].expect(nc_a2->size() == 5, "|NC(A2)| = 5");
    c[5].expect(nc_a3->size() == 14, "|NC(A3)| = 14");
    c[5].expect(build_nc_upper(nc_a2, 2)->size() == 12, "|NC^(2)(A2)| = 12");
    c[5].expect(sum_mobius_to_maxs(build_nc_lower(nc_a2, 2)->poset()) == 7, "Cat_+^(2)(A2) = 7");
  } catch (const std::exception& e) {
    c[5].expect(false, std::string("spot values: ") + e.what());
  }

  bool all = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const bool ok = c[i].failures.empty();
    all = all && ok;
    std::printf("%s %zu %s (%zu checks, %.2fs)\n", ok ? "PASS" : "FAIL", i + 1, c[i].title.c_str(), c[i].checks,
                c[i].seconds);
    for (const auto& f : c[i].failures) std::printf("  failed: %s\n", f.c_str());
  }
  std::printf("slowest A1-A3 verify: %s %.3fs\n", small_worst_case.c_str(), small_worst);
  return all ? 0 : 1;
}
