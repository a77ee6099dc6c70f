#pragma once

#include <cstdint>
#include <vector>

#include "ncp/coxeter.hpp"

namespace ncp {

struct DegreeData {
  std::vector<int> degrees;  // ascending
  int coxeter_number = 0;    // largest degree

  std::vector<int> exponents() const;
  std::uint64_t group_order() const;
  int num_reflections() const;
};

DegreeData degrees(const CoxeterType& ctype);

inline constexpr int kMaxFussParameter = 64;

/// prod_i (k h + d_i) / d_i. NonIntegerResult if the product does not divide
/// evenly; InvalidArgument for k outside [0, 64].
std::int64_t fuss_catalan(const CoxeterType& ctype, int k);

/// prod_i (k h + d_i - 2) / d_i.
std::int64_t positive_fuss_catalan(const CoxeterType& ctype, int k);

}  // namespace ncp
