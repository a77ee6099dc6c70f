#include "ncp/catalan.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "ncp/error.hpp"

namespace ncp {

std::vector<int> DegreeData::exponents() const {
  std::vector<int> out;
  for (int d : degrees) out.push_back(d - 1);
  return out;
}

std::uint64_t DegreeData::group_order() const {
  std::uint64_t p = 1;
  for (int d : degrees) p *= static_cast<std::uint64_t>(d);
  return p;
}

int DegreeData::num_reflections() const {
  int s = 0;
  for (int d : degrees) s += d - 1;
  return s;
}

DegreeData degrees(const CoxeterType& ctype) {
  validate(ctype);
  DegreeData out;
  const int n = ctype.rank;
  switch (ctype.family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) out.degrees.push_back(i);
      break;
    case Family::B:
      for (int i = 1; i <= n; ++i) out.degrees.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) out.degrees.push_back(2 * i);
      out.degrees.push_back(n);
      break;
    case Family::I2: out.degrees = {2, ctype.dihedral_order}; break;
    case Family::H3: out.degrees = {2, 6, 10}; break;
    case Family::F4: out.degrees = {2, 6, 8, 12}; break;
  }
  std::sort(out.degrees.begin(), out.degrees.end());
  out.coxeter_number = out.degrees.back();
  return out;
}

namespace {

std::int64_t dilated_product(const CoxeterType& ctype, int k, int shift) {
  if (k < 0 || k > kMaxFussParameter)
    throw Error(ErrorKind::InvalidArgument, "Fuss parameter must lie in [0, " + std::to_string(kMaxFussParameter) + "]");
  const DegreeData dd = degrees(ctype);
  using boost::multiprecision::cpp_int;
  cpp_int num = 1, den = 1;
  for (int d : dd.degrees) {
    num *= cpp_int(k) * dd.coxeter_number + d + shift;
    den *= d;
  }
  if (num % den != 0)
    throw Error(ErrorKind::NonIntegerResult, ctype.name() + ": Fuss-Catalan product does not divide evenly");
  const cpp_int q = num / den;
  if (q > std::numeric_limits<std::int64_t>::max())
    throw Error(ErrorKind::ScaleExceeded, "Fuss-Catalan value exceeds 64 bits");
  return q.convert_to<std::int64_t>();
}

}  // namespace

std::int64_t fuss_catalan(const CoxeterType& ctype, int k) { return dilated_product(ctype, k, 0); }

std::int64_t positive_fuss_catalan(const CoxeterType& ctype, int k) { return dilated_product(ctype, k, -2); }

}  // namespace ncp
