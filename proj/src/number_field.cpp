#include "ncp/number_field.hpp"

#include <map>
#include <sstream>

#include "ncp/error.hpp"

namespace ncp {

namespace {

using IntPoly = std::vector<long long>;

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly multiply_int(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim_int(out);
  return out;
}

// Exact division by a monic polynomial.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {};
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const long long c = num[k];
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  trim_int(num);
  if (!num.empty()) throw Error(ErrorKind::NonIntegerResult, "cyclotomic division left a remainder");
  return quot;
}

const IntPoly& cyclotomic(int n) {
  static std::map<int, IntPoly> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic(d));
  return memo.emplace(n, std::move(p)).first->second;
}

std::vector<Rational> reduce(std::vector<Rational> poly, const std::vector<long long>& psi) {
  const std::size_t d = psi.size() - 1;
  for (std::size_t k = poly.size(); k-- > d;) {
    const Rational c = poly[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) poly[k - d + j] -= c * psi[j];
  }
  if (poly.size() > d) poly.resize(d);
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  return poly;
}

}  // namespace

std::vector<long long> real_cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
  if (n == 1) return {-2, 1};
  if (n == 2) return {2, 1};
  const IntPoly& phi = cyclotomic(n);
  const std::size_t d = (phi.size() - 1) / 2;
  // Phi_n(z) = z^d psi(z + 1/z); expand z^j + z^-j as Dickson polynomials in x.
  std::vector<IntPoly> dickson{{2}, {0, 1}};
  for (std::size_t j = 2; j <= d; ++j) {
    IntPoly next = multiply_int({0, 1}, dickson[j - 1]);
    const IntPoly& prev = dickson[j - 2];
    next.resize(std::max(next.size(), prev.size()), 0);
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    trim_int(next);
    dickson.push_back(std::move(next));
  }
  IntPoly psi(d + 1, 0);
  psi[0] = phi[d];
  for (std::size_t j = 1; j <= d; ++j) {
    const long long a = phi[d + j];
    for (std::size_t i = 0; i < dickson[j].size(); ++i) psi[i] += a * dickson[j][i];
  }
  return psi;
}

RealCyclotomicField::RealCyclotomicField(int m) : m_(m) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "field index m must be at least 2");
  psi_ = real_cyclotomic_polynomial(2 * m);
  name_ = (m == 5) ? "tau" : "c" + std::to_string(m);
}

FieldElement::FieldElement(Rational value) {
  if (value != 0) coeffs_.push_back(std::move(value));
}

FieldElement FieldElement::generator(std::shared_ptr<const RealCyclotomicField> field) {
  FieldElement g;
  g.coeffs_ = reduce({Rational(0), Rational(1)}, field->minimal_polynomial());
  g.field_ = std::move(field);
  return g;
}

void FieldElement::adopt_field(const FieldElement& other) {
  if (!other.field_) return;
  if (!field_) {
    field_ = other.field_;
    return;
  }
  if (field_ != other.field_ && field_->m() != other.field_->m())
    throw Error(ErrorKind::InvalidArgument, "arithmetic across distinct number fields");
}

void FieldElement::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  adopt_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) { return *this += -rhs; }

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  adopt_field(rhs);
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = field_ ? reduce(std::move(prod), field_->minimal_polynomial()) : std::move(prod);
  trim();
  return *this;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational x = i < a.coeffs_.size() ? a.coeffs_[i] : Rational(0);
    const Rational y = i < b.coeffs_.size() ? b.coeffs_[i] : Rational(0);
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> FieldElement::multiplication_matrix(
    const RealCyclotomicField* field) const {
  const int d = field ? field->degree() : 1;
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> m(d, d);
  m.setConstant(Rational(0));
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> shifted(static_cast<std::size_t>(j), Rational(0));
    shifted.insert(shifted.end(), coeffs_.begin(), coeffs_.end());
    if (field) shifted = reduce(std::move(shifted), field->minimal_polynomial());
    for (std::size_t i = 0; i < shifted.size() && i < static_cast<std::size_t>(d); ++i)
      m(static_cast<Eigen::Index>(i), j) = shifted[i];
  }
  return m;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string FieldElement::to_string() const {
  if (coeffs_.empty()) return "0";
  const std::string name = field_ ? field_->generator_name() : "c";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    std::string term;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (i == 0) {
      term = ncp::to_string(mag);
    } else {
      if (mag != 1) term = ncp::to_string(mag) + "*";
      term += name;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? "-" : "+") + term;
  }
  return out;
}

}  // namespace ncp
