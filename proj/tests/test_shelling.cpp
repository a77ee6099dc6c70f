#include <doctest.h>

#include "ncp/catalan.hpp"
#include "ncp/error.hpp"
#include "ncp/shelling.hpp"

using namespace ncp;

namespace {

std::shared_ptr<const NCLattice> nc_of(const CoxeterType& t) { return NCLattice::build(CoxeterSystem::build(t)); }

std::vector<CoxeterType> grid_types() {
  std::vector<CoxeterType> t = {CoxeterType::A(1), CoxeterType::A(2), CoxeterType::A(3), CoxeterType::A(4),
                                CoxeterType::B(2), CoxeterType::B(3), CoxeterType::D(4), CoxeterType::H3()};
  for (int m = 3; m <= 12; ++m) t.push_back(CoxeterType::I2(m));
  return t;
}

std::int64_t sign(int e) { return e % 2 ? -1 : 1; }

}  // namespace

TEST_CASE("lex-ABW label positions") {
  CHECK(lex_abw_position(1, 0, 3) == 0);
  CHECK(lex_abw_position(1, 2, 3) == 2);
  CHECK(lex_abw_position(2, 0, 3) == 4);
  CHECK(lex_abw_position(3, 2, 3) == 9);
}

TEST_CASE("lex-ABW labeling on NC_(2)(A2)") {
  auto nc = nc_of(CoxeterType::A(2));
  const auto order = find_el_reflection_order(*nc);
  auto low = build_nc_lower(nc, 2);
  const auto top = with_top(*low);
  CHECK(top.size() == 13);
  const auto lab = lex_abw_labeling(*low, top, order);
  CHECK(lab.labels().size() == 7);
  CHECK(lab.labels().name(3) == kThetaLabel);
  CHECK(is_el_labeling(top, lab).ok);
  for_each_maximal_chain(top, *top.bottom(), *top.top(), [&](std::span<const std::size_t> c) {
    const auto w = chain_label_word(top, lab, c);
    CHECK(w.size() == 3);
    CHECK(w.back() == 3);
    return true;
  });
  CHECK(count_falling_maximal_chains(top, lab) == 2);
  CHECK(mobius_number(top) == sign(*top.rank()) * 2);
}

TEST_CASE("k = 1: natural labeling with theta on top") {
  auto nc = nc_of(CoxeterType::A(3));
  const auto order = find_el_reflection_order(*nc);
  auto low = build_nc_lower(nc, 1);
  const auto top = with_top(*low);
  const auto lab = lex_abw_labeling(*low, top, order);
  const auto nat = natural_labeling(*nc, order);
  CHECK(lab.labels().size() == nc->system().num_reflections() + 1);
  for (const auto& [x, y] : top.covers()) {
    if (y == low->size()) {
      CHECK(lab.label(top, x, y) == static_cast<int>(nc->system().num_reflections()));
    } else {
      CHECK(lab.label(top, x, y) == nat.label(nc->poset(), low->deltas(x)[0], low->deltas(y)[0]));
    }
  }
  // Every falling chain of NC + 1hat would need delta_1 = e at the end: none exist.
  CHECK(count_falling_maximal_chains(top, lab) == 0);
  CHECK(mobius_number(top) == 0);
}

TEST_CASE("falling chain count on NC(A2)") {
  auto nc = nc_of(CoxeterType::A(2));
  const auto lab = natural_labeling(*nc, find_el_reflection_order(*nc));
  CHECK(count_falling_maximal_chains(nc->poset(), lab) == 2);
}

TEST_CASE("malformed covers are rejected") {
  auto nc = nc_of(CoxeterType::A(2));
  const auto order = find_el_reflection_order(*nc);
  auto low = build_nc_lower(nc, 2);
  const auto good = with_top(*low);
  std::size_t two = 0;
  while (low->deltas(two)[0] == 0 || low->deltas(two)[1] == 0) ++two;
  const std::vector<Cover> covers = {{*low->poset().bottom(), two}};
  const auto bad = FinitePoset::from_covers(good.keys(), covers);
  CHECK_THROWS_WITH_AS(lex_abw_labeling(*low, bad, order), doctest::Contains("MalformedCover"), Error);
  CHECK_THROWS_AS(lex_abw_labeling(*low, low->poset(), order), Error);
}

TEST_CASE("block census agrees with the direct falling-chain count") {
  for (const auto& t : grid_types()) {
    auto nc = nc_of(t);
    const auto order = find_el_reflection_order(*nc);
    for (int k = 1; k <= 3; ++k) {
      auto low = build_nc_lower(nc, k);
      const auto top = with_top(*low);
      const auto lab = lex_abw_labeling(*low, top, order);
      const auto census = falling_chain_decomposition_census(*low, order);
      CHECK(census.total == count_falling_maximal_chains(top, lab));
      CHECK(census.per_block.size() == static_cast<std::size_t>(k));
      CHECK(census.per_block[0] == 0);
      const auto first = check_falling_first_block(*low, top, lab);
      CHECK(first.violations == 0);
      CHECK(first.chains == census.total);
    }
  }
}

TEST_CASE("small census examples") {
  for (const auto& t : {CoxeterType::A(1), CoxeterType::A(2), CoxeterType::B(2)}) {
    auto nc = nc_of(t);
    const auto order = find_el_reflection_order(*nc);
    auto low = build_nc_lower(nc, 2);
    const auto top = with_top(*low);
    CHECK(falling_chain_decomposition_census(*low, order).total ==
          count_falling_maximal_chains(top, lex_abw_labeling(*low, top, order)));
  }
  auto a1 = nc_of(CoxeterType::A(1));
  const auto c = falling_chain_decomposition_census(*build_nc_lower(a1, 2), find_el_reflection_order(*a1));
  CHECK(c.total == 1);
  CHECK(c.contributing_maximals == 1);
  CHECK(to_json(c)["per_block"] == nlohmann::json::array({0, 1}));
}

TEST_CASE("falling counts in NC(W) are |mu|") {
  for (const auto& t : grid_types()) {
    auto nc = nc_of(t);
    const auto F = falling_counts_from_bottom(*nc, find_el_reflection_order(*nc));
    for (std::size_t w = 0; w < nc->size(); ++w)
      CHECK(static_cast<std::int64_t>(F[w]) * sign(nc->rank_of(static_cast<std::size_t>(w))) == nc->mobius_from_bottom()[w]);
  }
}

TEST_CASE("factorization Mobius sums") {
  CHECK(factorization_mobius_sum(*nc_of(CoxeterType::A(2)), 1) == 2);
  CHECK(factorization_mobius_sum(*nc_of(CoxeterType::A(1)), 2) == -2);
  CHECK(factorization_mobius_sum(*nc_of(CoxeterType::A(2)), 2) == 7);
  for (const auto& t : grid_types()) {
    auto nc = nc_of(t);
    for (int j = 1; j <= 3; ++j) CHECK(factorization_mobius_sum(*nc, j) == sign(t.rank) * positive_fuss_catalan(t, j));
  }
}

TEST_CASE("sum of mu over maximal elements") {
  auto a2 = nc_of(CoxeterType::A(2));
  CHECK(sum_mobius_to_maxs(build_nc_lower(a2, 1)->poset()) == 2);
  CHECK(sum_mobius_to_maxs(build_nc_lower(a2, 2)->poset()) == 7);
  CHECK(sum_mobius_to_maxs(build_nc_lower(nc_of(CoxeterType::A(1)), 2)->poset()) == -2);
  CHECK_THROWS_WITH_AS(sum_mobius_to_maxs(FinitePoset::from_covers({"a", "b"}, {})), doctest::Contains("NoMinimum"),
                       Error);
  for (const auto& t : grid_types()) {
    auto nc = nc_of(t);
    for (int k = 1; k <= 3; ++k)
      CHECK(sum_mobius_to_maxs(build_nc_lower(nc, k)->poset()) == sign(t.rank) * positive_fuss_catalan(t, k));
  }
}

TEST_CASE("mu(NC_(k) + 1hat) carries the sign (-1)^(n-1)") {
  for (const auto& t : grid_types()) {
    auto nc = nc_of(t);
    for (int k = 1; k <= 3; ++k) {
      const auto mu = mobius_number(with_top(*build_nc_lower(nc, k)));
      CHECK(mu == sign(t.rank - 1) * positive_fuss_catalan(t, k - 1));
    }
  }
}
