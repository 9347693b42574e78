#pragma once

// Closed-form tables: Knorrer shifts of filtered groups, ordinary double
// points, Sylvester counts and the ADE curve and threefold atlases.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "singk/intlat.hpp"

namespace singk {

struct FilterComponent {
  long degree = 0;
  AbelianGroupStructure part;
  bool operator==(const FilterComponent&) const = default;
};

/// An abelian group with graded pieces gr^degree, degrees strictly increasing.
struct FilteredAbelianGroup {
  AbelianGroupStructure group;
  std::vector<FilterComponent> components;

  /// Checks degrees and sets group to the direct sum of the parts.
  static FilteredAbelianGroup from_components(std::vector<FilterComponent> components);
  std::string to_string() const;
  bool operator==(const FilteredAbelianGroup&) const = default;
};

FilteredAbelianGroup knorrer_shift(const FilteredAbelianGroup& fg);

enum class KnorrerBase {
  DoublePoint,  // k[z]/(z^2): Z/2 in degree 0
  NodeCurve,    // xy = 0: Z in degree 0
};

FilteredAbelianGroup knorrer_base(KnorrerBase base);
/// The base shifted k times.
FilteredAbelianGroup knorrer_chain(KnorrerBase base, long k);
/// Ordinary double point of dimension n >= 1.
FilteredAbelianGroup odp_invariants(long n);

long sylvester_closed_form(long a, long b);
long sylvester_enumerate(long a, long b);
/// Both routes, which must agree. Throws NotCoprime, InvalidArgument.
long sylvester_count(long a, long b);

/// Integer dimension c + s * param, with an empty param for constants.
struct AffineDim {
  long constant = 0;
  long coeff = 0;
  std::string param;

  static AffineDim fixed(long d) { return {d, 0, {}}; }
  bool is_constant() const noexcept { return coeff == 0; }
  long evaluate(long value) const { return constant + coeff * value; }
  bool operator==(const AffineDim&) const = default;
};

/// Shapes like k^*, Z, k^d, (A ⊕ B)^c and extensions [A; B].
struct SymbolicGroupExpr {
  enum class Kind { UnitsOfField, Integers, VectorSpace, Product, Extension };

  Kind kind = Kind::VectorSpace;
  AffineDim dim;                           // VectorSpace
  std::vector<SymbolicGroupExpr> children; // Product factors, or {sub, quotient}
  long multiplicity = 1;                   // Product

  static SymbolicGroupExpr units();
  static SymbolicGroupExpr integers();
  static SymbolicGroupExpr vector_space(AffineDim d);
  static SymbolicGroupExpr product(std::vector<SymbolicGroupExpr> factors, long multiplicity = 1);
  static SymbolicGroupExpr extension(SymbolicGroupExpr sub, SymbolicGroupExpr quotient);

  bool is_zero() const;
  /// Drops zero summands and trivial wrappers.
  SymbolicGroupExpr normalized() const;
  /// Replaces the family parameter by a value.
  SymbolicGroupExpr evaluated(long value) const;
  std::string render() const;
  /// Inverse of render; also accepts "+" for ⊕ and "k^{*}". Throws ParseError.
  static SymbolicGroupExpr parse(std::string_view text);

  bool operator==(const SymbolicGroupExpr&) const = default;
};

/// One concrete ADE curve such as A_4 or E_7.
struct ADECurveRecord {
  std::string label;
  std::string family;
  std::optional<long> parameter;
  std::string equation;
  long components = 0;
  AbelianGroupStructure ksg0;
  long pic_dim = 0;
  SymbolicGroupExpr ksg1;
  /// Exponents (a, b) of the cuspidal component x^a - y^b, if any.
  std::optional<std::pair<long, long>> cusp;
};

/// Accepts "A4", "A_4", "D_{5}", "E6", ... Throws InvalidLabel.
ADECurveRecord ade_curve_invariants(std::string_view label);

/// Cl of the threefold xy + g(z, w) over the ADE curve g. Throws InvalidLabel.
AbelianGroupStructure ade_threefold_class_group(std::string_view label);

struct ADECurveFamilyRow {
  std::string family;
  std::string condition;
  std::string equation;
  long components = 0;
  AbelianGroupStructure ksg0;
  SymbolicGroupExpr pic;
  SymbolicGroupExpr ksg1;
  /// Smallest member, used to instantiate the row.
  std::string first_label;
};

struct ADEThreefoldFamilyRow {
  std::string family;
  std::string condition;
  std::string equation;
  AbelianGroupStructure cl;
  std::string first_label;
};

const std::vector<ADECurveFamilyRow>& ade_curve_table();
const std::vector<ADEThreefoldFamilyRow>& ade_threefold_table();

}  // namespace singk
