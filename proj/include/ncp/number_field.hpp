#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace ncp {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// The real subfield Q(2cos(pi/m)) of a cyclotomic field, presented as
/// Q[x]/(psi(x)) with psi the (monic, integral) minimal polynomial of
/// 2cos(pi/m). m = 5 gives Q(sqrt 5) with generator the golden ratio; m <= 3
/// and m = 6 collapse or reduce to quadratic fields.
class RealCyclotomicField {
 public:
  explicit RealCyclotomicField(int m);

  int m() const noexcept { return m_; }
  int degree() const noexcept { return static_cast<int>(psi_.size()) - 1; }
  /// Coefficients of psi, constant term first; the leading coefficient is 1.
  const std::vector<long long>& minimal_polynomial() const noexcept { return psi_; }
  const std::string& generator_name() const noexcept { return name_; }

 private:
  int m_;
  std::vector<long long> psi_;
  std::string name_;
};

/// Minimal polynomial of 2cos(2*pi/n), constant term first.
std::vector<long long> real_cyclotomic_polynomial(int n);

/// An element a_0 + a_1 c + ... + a_{d-1} c^{d-1} of a RealCyclotomicField
/// with c its generator. Rational constants carry no field and mix freely
/// with elements of any field; two non-constant elements must share a field.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(int value) : FieldElement(Rational(value)) {}  // NOLINT: Eigen needs implicit Scalar(int)
  FieldElement(Rational value);  // NOLINT

  static FieldElement generator(std::shared_ptr<const RealCyclotomicField> field);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const std::shared_ptr<const RealCyclotomicField>& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_rational() const noexcept { return coeffs_.size() <= 1; }
  /// Only meaningful when is_rational().
  Rational rational_value() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement operator-() const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.coeffs_ == b.coeffs_; }
  /// Lexicographic on coefficient vectors; a total order for use as map keys,
  /// unrelated to the real ordering.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  /// Matrix of multiplication by this element on the power basis of a field
  /// of the given degree (degree 1 for rational constants in Q).
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> multiplication_matrix(
      const RealCyclotomicField* field) const;

  std::string to_string() const;

 private:
  void adopt_field(const FieldElement& other);
  void trim();

  std::shared_ptr<const RealCyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

std::string to_string(const Rational& q);

}  // namespace ncp

namespace Eigen {

template <>
struct NumTraits<ncp::Rational> : GenericNumTraits<ncp::Rational> {
  typedef ncp::Rational Real;
  typedef ncp::Rational NonInteger;
  typedef ncp::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
};

template <>
struct NumTraits<ncp::FieldElement> : GenericNumTraits<ncp::FieldElement> {
  typedef ncp::FieldElement Real;
  typedef ncp::FieldElement NonInteger;
  typedef ncp::FieldElement Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 128
  };
};

}  // namespace Eigen
