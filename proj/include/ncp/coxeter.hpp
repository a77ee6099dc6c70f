#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "ncp/number_field.hpp"

namespace ncp {

enum class Family { A, B, D, I2, H3, F4 };

std::string_view to_string(Family f) noexcept;

struct CoxeterType {
  Family family = Family::A;
  int rank = 1;
  int dihedral_order = 0;  // m, only for I2

  static CoxeterType A(int n) { return {Family::A, n, 0}; }
  static CoxeterType B(int n) { return {Family::B, n, 0}; }
  static CoxeterType D(int n) { return {Family::D, n, 0}; }
  static CoxeterType I2(int m) { return {Family::I2, 2, m}; }
  static CoxeterType H3() { return {Family::H3, 3, 0}; }
  static CoxeterType F4() { return {Family::F4, 4, 0}; }

  /// "A3", "I2(5)", "H3".
  std::string name() const;

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

/// Throws InvalidRank for a rank the family does not admit (D2, D3 included:
/// those are A1xA1 and A3) and for I2(m) with m < 3.
void validate(const CoxeterType& ctype);

/// Parses names such as "A3", "B2", "D4", "I2(7)", "H3", "F4". E-types and H4
/// are recognised and rejected with UnsupportedType.
CoxeterType parse_coxeter_type(std::string_view text);

/// A group element of one particular CoxeterSystem. Elements of different
/// systems never compare equal and cannot be multiplied together.
class GroupElement {
 public:
  GroupElement() = default;

  std::uint32_t index() const noexcept { return index_; }
  std::uint32_t system_tag() const noexcept { return tag_; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  friend class CoxeterSystem;
  GroupElement(std::uint32_t tag, std::uint32_t index) : tag_(tag), index_(index) {}

  std::uint32_t tag_ = 0;
  std::uint32_t index_ = 0;
};

using RootVector = Eigen::Matrix<FieldElement, Eigen::Dynamic, 1>;
using RootMatrix = Eigen::Matrix<FieldElement, Eigen::Dynamic, Eigen::Dynamic>;

/// Roots in simple-root coordinates. The first num_positive entries are the
/// positive roots (simple roots first, in canonical label order); entry
/// num_positive + i is the negative of entry i.
struct RootSystem {
  std::shared_ptr<const RealCyclotomicField> field;  // null when all entries are rational
  RootMatrix cartan;                                 // a_ij = <alpha_i^vee, alpha_j>
  std::vector<RootVector> roots;
  int num_positive = 0;

  int rank() const { return static_cast<int>(cartan.rows()); }
  int negation(int root) const { return root < num_positive ? root + num_positive : root - num_positive; }
  /// s_i(v) = v - (sum_j a_ij v_j) alpha_i.
  RootVector reflect(int simple, const RootVector& v) const;
};

RootSystem build_root_system(const CoxeterType& ctype);

struct BuildOptions {
  /// Stored order of S as a permutation of the canonical labels 0..n-1;
  /// empty means canonical. The Coxeter element is the product in this order.
  std::vector<int> generator_order;
  std::size_t max_group_order = 200000;
};

/// A finite Coxeter group realised exactly as a permutation group on its
/// root system. Immutable after build; safe for concurrent reads.
class CoxeterSystem {
 public:
  static std::shared_ptr<const CoxeterSystem> build(const CoxeterType& ctype, BuildOptions options = {});

  const CoxeterType& type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }
  std::size_t order() const noexcept { return inverse_.size(); }
  std::size_t num_reflections() const noexcept { return reflections_.size(); }
  const std::vector<int>& generator_order() const noexcept { return generator_order_; }

  GroupElement identity() const { return element(0); }
  GroupElement element(std::size_t index) const;
  std::span<const GroupElement> elements() const noexcept { return elements_; }
  std::span<const GroupElement> simple_generators() const noexcept { return simple_; }
  /// T in canonical order (lexicographic on root permutations).
  std::span<const GroupElement> reflections() const noexcept { return reflections_; }
  GroupElement coxeter_element() const noexcept { return coxeter_element_; }

  GroupElement multiply(GroupElement a, GroupElement b) const;
  GroupElement inverse(GroupElement a) const;
  /// Word product left to right.
  GroupElement product(std::span<const GroupElement> word) const;

  int absolute_length(GroupElement w) const;
  bool absolute_leq(GroupElement pi, GroupElement sigma) const;
  /// Length with respect to S (number of positive roots sent negative).
  int coxeter_length(GroupElement w) const;

  bool is_reflection(GroupElement w) const;
  /// Position of w in reflections(), or -1.
  int reflection_index(GroupElement w) const;
  /// Index into roots().roots of the positive root of a reflection.
  int reflection_root(GroupElement t) const;

  /// The permutation of root indices realising w.
  std::u16string_view permutation(GroupElement w) const;
  /// Matrix of w on the simple-root basis; column j holds w(alpha_j).
  RootMatrix matrix(GroupElement w) const;
  const RootSystem& roots() const noexcept { return roots_; }

  /// Cycle notation for A_n, signed one-line notation for B_n and D_n,
  /// r^a / r^a s for I2(m), root or matrix entries for H3 and F4.
  std::string render(GroupElement w) const;

  bool owns(GroupElement w) const noexcept { return w.system_tag() == tag_ && w.index() < order(); }

 private:
  CoxeterSystem() = default;
  void check(GroupElement w) const;
  std::uint32_t lookup(std::u16string_view perm) const;
  std::string render_type_a(std::uint32_t w) const;
  std::string render_signed(std::uint32_t w) const;
  std::string render_matrix(std::uint32_t w) const;

  CoxeterType type_;
  std::uint32_t tag_ = 0;
  RootSystem roots_;
  int degree_ = 0;  // number of roots; permutation length
  std::vector<int> generator_order_;
  std::u16string perms_;  // order() * degree_ entries
  std::unordered_map<std::u16string, std::uint32_t> index_of_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint8_t> absolute_length_;
  std::vector<int> reflection_pos_;
  std::vector<int> reflection_root_;
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> simple_;
  std::vector<GroupElement> reflections_;
  GroupElement coxeter_element_;
  std::vector<std::string> dihedral_names_;
};

}  // namespace ncp

template <>
struct std::hash<ncp::GroupElement> {
  std::size_t operator()(const ncp::GroupElement& g) const noexcept {
    return (static_cast<std::size_t>(g.system_tag()) << 32) ^ g.index();
  }
};
