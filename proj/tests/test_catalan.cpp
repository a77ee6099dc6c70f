#include <doctest.h>

#include <boost/math/special_functions/binomial.hpp>

#include "ncp/catalan.hpp"
#include "ncp/error.hpp"

using namespace ncp;

namespace {

std::int64_t binom(unsigned n, unsigned k) {
  return static_cast<std::int64_t>(boost::math::binomial_coefficient<double>(n, k) + 0.5);
}

}  // namespace

TEST_CASE("degree tables") {
  auto a2 = degrees(CoxeterType::A(2));
  CHECK(a2.degrees == std::vector<int>{2, 3});
  CHECK(a2.coxeter_number == 3);
  CHECK(a2.exponents() == std::vector<int>{1, 2});
  auto b3 = degrees(CoxeterType::B(3));
  CHECK(b3.degrees == std::vector<int>{2, 4, 6});
  CHECK(b3.coxeter_number == 6);
  CHECK(b3.group_order() == 48);
  CHECK(b3.num_reflections() == 9);
  for (int m = 3; m <= 12; ++m) {
    auto d = degrees(CoxeterType::I2(m));
    CHECK(d.degrees == std::vector<int>{2, m});
    CHECK(d.group_order() == static_cast<std::uint64_t>(2 * m));
    CHECK(d.num_reflections() == m);
  }
  CHECK(degrees(CoxeterType::D(4)).degrees == std::vector<int>{2, 4, 4, 6});
  CHECK(degrees(CoxeterType::H3()).group_order() == 120);
  CHECK(degrees(CoxeterType::F4()).group_order() == 1152);
  CHECK_THROWS_AS(degrees(CoxeterType::D(3)), Error);
}

TEST_CASE("Fuss-Catalan spot values") {
  CHECK(fuss_catalan(CoxeterType::A(2), 0) == 1);
  CHECK(fuss_catalan(CoxeterType::H3(), 0) == 1);
  CHECK(fuss_catalan(CoxeterType::A(2), 1) == 5);
  CHECK(fuss_catalan(CoxeterType::A(2), 2) == 12);
  CHECK(positive_fuss_catalan(CoxeterType::A(2), 0) == 0);
  CHECK(positive_fuss_catalan(CoxeterType::F4(), 0) == 0);
  CHECK(positive_fuss_catalan(CoxeterType::A(2), 1) == 2);
  CHECK(positive_fuss_catalan(CoxeterType::A(2), 2) == 7);
  CHECK(fuss_catalan(CoxeterType::B(2), 2) == 15);
  CHECK(positive_fuss_catalan(CoxeterType::B(2), 2) - positive_fuss_catalan(CoxeterType::B(2), 1) == 7);
  CHECK(fuss_catalan(CoxeterType::H3(), 1) == 32);
  CHECK(fuss_catalan(CoxeterType::H3(), 3) == 384);
  CHECK(fuss_catalan(CoxeterType::F4(), 1) == 105);
}

TEST_CASE("closed forms for the classical families") {
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned k = 1; k <= 4; ++k) {
      // A_{n}: (1/(n+1)) binom((k+1)(n+1), n)
      CHECK(fuss_catalan(CoxeterType::A(static_cast<int>(n)), static_cast<int>(k)) ==
            binom((k + 1) * (n + 1), n) / static_cast<std::int64_t>(n + 1));
    }
  for (unsigned n = 2; n <= 8; ++n) {
    CHECK(fuss_catalan(CoxeterType::B(static_cast<int>(n)), 1) == binom(2 * n, n));
    CHECK(positive_fuss_catalan(CoxeterType::B(static_cast<int>(n)), 1) == binom(2 * n - 1, n));
    CHECK(positive_fuss_catalan(CoxeterType::A(static_cast<int>(n)), 1) == binom(2 * n, n) / static_cast<std::int64_t>(n + 1));
  }
  for (unsigned n = 4; n <= 8; ++n)
    CHECK(fuss_catalan(CoxeterType::D(static_cast<int>(n)), 1) * static_cast<std::int64_t>(n) ==
          static_cast<std::int64_t>(3 * n - 2) * binom(2 * n - 2, n - 1));
  for (int m = 3; m <= 12; ++m) {
    CHECK(fuss_catalan(CoxeterType::I2(m), 1) == m + 2);
    CHECK(positive_fuss_catalan(CoxeterType::I2(m), 1) == m - 1);
  }
}

TEST_CASE("every supported parameter divides evenly") {
  for (const auto& t : {CoxeterType::A(5), CoxeterType::B(4), CoxeterType::D(5), CoxeterType::H3(), CoxeterType::F4(),
                        CoxeterType::I2(11)})
    for (int k = 0; k <= kMaxFussParameter; ++k) {
      CHECK_NOTHROW(fuss_catalan(t, k));
      CHECK_NOTHROW(positive_fuss_catalan(t, k));
    }
}

TEST_CASE("parameter range") {
  CHECK_THROWS_WITH_AS(fuss_catalan(CoxeterType::A(2), -1), doctest::Contains("InvalidArgument"), Error);
  CHECK_THROWS_WITH_AS(fuss_catalan(CoxeterType::A(2), kMaxFussParameter + 1), doctest::Contains("InvalidArgument"), Error);
}
