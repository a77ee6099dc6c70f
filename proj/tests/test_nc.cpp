#include <doctest.h>

#include <algorithm>

#include "ncp/catalan.hpp"
#include "ncp/error.hpp"
#include "ncp/nc.hpp"

using namespace ncp;

namespace {

std::shared_ptr<const NCLattice> nc_of(const CoxeterType& t, BuildOptions o = {}) {
  return NCLattice::build(CoxeterSystem::build(t, o));
}

std::vector<CoxeterType> grid_types() {
  std::vector<CoxeterType> t = {CoxeterType::A(1), CoxeterType::A(2), CoxeterType::A(3), CoxeterType::A(4),
                                CoxeterType::B(2), CoxeterType::B(3), CoxeterType::D(4), CoxeterType::H3()};
  for (int m = 3; m <= 12; ++m) t.push_back(CoxeterType::I2(m));
  return t;
}

}  // namespace

TEST_CASE("NC(W) sizes") {
  CHECK(nc_of(CoxeterType::A(1))->size() == 2);
  CHECK(nc_of(CoxeterType::A(1))->poset().num_covers() == 1);
  CHECK(nc_of(CoxeterType::A(2))->size() == 5);
  CHECK(nc_of(CoxeterType::A(3))->size() == 14);
  CHECK(nc_of(CoxeterType::B(3))->size() == 20);
  for (const auto& t : grid_types()) CHECK(static_cast<std::int64_t>(nc_of(t)->size()) == fuss_catalan(t, 1));
}

TEST_CASE("NC(W) structure") {
  for (const auto& t : grid_types()) {
    auto nc = nc_of(t);
    const auto& W = nc->system();
    const auto& p = nc->poset();
    CHECK(p.is_graded());
    CHECK(p.rank() == std::optional<int>(t.rank));
    CHECK(nc->element(nc->bottom()) == W.identity());
    CHECK(nc->element(nc->top()) == W.coxeter_element());
    for (std::size_t i = 0; i < nc->size(); ++i) {
      const auto w = nc->element(i);
      CHECK(W.absolute_leq(W.identity(), w));
      CHECK(W.absolute_leq(w, W.coxeter_element()));
      CHECK(p.height(i) == W.absolute_length(w));
      CHECK(nc->index_of(w) == std::optional<std::size_t>(i));
    }
    for (const auto& [x, y] : p.covers()) {
      const auto t_ = W.multiply(W.inverse(nc->element(x)), nc->element(y));
      CHECK(W.is_reflection(t_));
      CHECK(nc->cover_reflection(x, y) == t_);
    }
    for (std::size_t x = 0; x < nc->size(); ++x)
      for (std::size_t y = 0; y < nc->size(); ++y) CHECK(nc->quotient(x, y).has_value() == p.leq(x, y));
  }
}

TEST_CASE("mu(NC(W)) = (-1)^n Cat_+(W)") {
  for (const auto& t : grid_types()) {
    auto nc = nc_of(t);
    const std::int64_t s = t.rank % 2 ? -1 : 1;
    CHECK(mobius_number(nc->poset()) == s * positive_fuss_catalan(t, 1));
    CHECK(nc->mobius_from_bottom()[nc->top()] == mobius_number(nc->poset()));
  }
}

TEST_CASE("reflection orders") {
  auto nc = nc_of(CoxeterType::A(1));
  const auto& W = nc->system();
  auto o = find_el_reflection_order(*nc);
  CHECK(o.size() == 1);
  CHECK_THROWS_AS(ReflectionOrder(W, {}), Error);
  auto nc2 = nc_of(CoxeterType::A(2));
  const auto& W2 = nc2->system();
  std::vector<GroupElement> dup = {W2.reflections()[0], W2.reflections()[0], W2.reflections()[1]};
  CHECK_THROWS_AS(ReflectionOrder(W2, dup), Error);
  std::vector<GroupElement> bad = {W2.reflections()[0], W2.reflections()[1], W2.identity()};
  CHECK_THROWS_AS(ReflectionOrder(W2, bad), Error);
}

TEST_CASE("A2: found order is EL with one rising chain in [e, gamma]") {
  auto nc = nc_of(CoxeterType::A(2));
  const auto order = find_el_reflection_order(*nc);
  const auto lab = natural_labeling(*nc, order);
  CHECK(is_el_labeling(nc->poset(), lab).ok);
  int rising = 0;
  for_each_maximal_chain(nc->poset(), nc->bottom(), nc->top(), [&](std::span<const std::size_t> c) {
    const auto w = chain_label_word(nc->poset(), lab, c);
    CHECK(w.size() == 2);
    if (is_rising(w)) ++rising;
    return true;
  });
  CHECK(rising == 1);
}

TEST_CASE("A2: exhaustive scan of all 3! orders") {
  auto nc = nc_of(CoxeterType::A(2));
  const auto& W = nc->system();
  std::vector<GroupElement> ts(W.reflections().begin(), W.reflections().end());
  int pass = 0, fail = 0;
  bool witness_is_whole = false;
  do {
    const ReflectionOrder o(W, ts);
    const auto r = is_el_labeling(nc->poset(), natural_labeling(*nc, o));
    if (r.ok) {
      ++pass;
    } else {
      ++fail;
      witness_is_whole |= r.witness->lower == nc->bottom() && r.witness->upper == nc->top();
    }
  } while (std::next_permutation(ts.begin(), ts.end()));
  // An order is EL exactly when it lists the three reflections compatibly with gamma.
  CHECK(pass == 3);
  CHECK(fail == 3);
  CHECK(witness_is_whole);
}

TEST_CASE("B2: exhaustive scan agrees with the search") {
  auto nc = nc_of(CoxeterType::B(2));
  const auto& W = nc->system();
  std::vector<GroupElement> ts(W.reflections().begin(), W.reflections().end());
  int pass = 0;
  do {
    if (is_el_labeling(nc->poset(), natural_labeling(*nc, ReflectionOrder(W, ts))).ok) ++pass;
  } while (std::next_permutation(ts.begin(), ts.end()));
  CHECK(pass > 0);
  CHECK(is_el_labeling(nc->poset(), natural_labeling(*nc, find_el_reflection_order(*nc))).ok);
}

TEST_CASE("found orders are EL for every grid type and generator order") {
  for (const auto& t : grid_types()) {
    auto nc = nc_of(t);
    OrderSearchStats st;
    const auto order = find_el_reflection_order(*nc, 10'000'000, &st);
    CHECK(is_el_labeling(nc->poset(), natural_labeling(*nc, order)).ok);
    CHECK(st.candidates_tried >= 1);
    CHECK(find_el_reflection_order(*nc) == order);
  }
  for (const auto& perm : {std::vector<int>{2, 1, 0}, std::vector<int>{1, 0, 2}, std::vector<int>{1, 2, 0}}) {
    auto nc = nc_of(CoxeterType::B(3), {perm});
    CHECK(is_el_labeling(nc->poset(), natural_labeling(*nc, find_el_reflection_order(*nc))).ok);
  }
}

TEST_CASE("backtracking search finds EL orders on its own") {
  for (const auto& t : {CoxeterType::A(2), CoxeterType::A(3), CoxeterType::B(2), CoxeterType::B(3), CoxeterType::I2(5)}) {
    auto nc = nc_of(t);
    OrderSearchStats st;
    const auto order = find_el_reflection_order(*nc, 10'000'000, &st, false);
    CHECK(is_el_labeling(nc->poset(), natural_labeling(*nc, order)).ok);
    CHECK(st.checker_calls >= 1);
  }
  auto nc = nc_of(CoxeterType::A(3));
  CHECK_THROWS_WITH_AS(find_el_reflection_order(*nc, 2, nullptr, false), doctest::Contains("SearchExhausted"), Error);
}

TEST_CASE("sorting-word order is an inversion order of a reduced word of w0") {
  for (const auto& t : grid_types()) {
    auto W = CoxeterSystem::build(t);
    const auto o = sorting_word_reflection_order(*W, W->simple_generators());
    CHECK(o.size() == W->num_reflections());
    CHECK(o.reflections().front() == W->simple_generators()[0]);
  }
}

TEST_CASE("natural labeling words have length n") {
  auto nc = nc_of(CoxeterType::A(3));
  const auto order = find_el_reflection_order(*nc);
  const auto lab = natural_labeling(*nc, order);
  std::size_t chains = 0;
  for_each_maximal_chain(nc->poset(), nc->bottom(), nc->top(), [&](std::span<const std::size_t> c) {
    CHECK(chain_label_word(nc->poset(), lab, c).size() == 3);
    ++chains;
    return true;
  });
  CHECK(chains == 16);  // n^(n-2) for A3: 4^2
  for (std::size_t y : nc->poset().upper_covers(nc->bottom()))
    CHECK(lab.label(nc->poset(), nc->bottom(), y) == order.position(nc->system(), nc->element(y)));
}

TEST_CASE("labelled DOT export") {
  auto nc = nc_of(CoxeterType::A(2));
  const auto dot = to_dot(*nc, find_el_reflection_order(*nc));
  CHECK(std::count(dot.begin(), dot.end(), '>') == 6);
  CHECK(dot.find("#1") != std::string::npos);
}
