#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "redux/field.hpp"
#include "redux/layout.hpp"

namespace redux {

struct VarPower {
  std::uint32_t var;
  std::uint32_t exp;
  friend bool operator==(const VarPower&, const VarPower&) = default;
};

/// Exponent vector stored sparsely as (variable position, exponent) pairs
/// sorted by position. Positions refer to the owning polynomial's layout.
class Monomial {
 public:
  Monomial() = default;

  static Monomial of(std::uint32_t var, std::uint32_t exp = 1);
  static Monomial from_dense(std::span<const std::uint32_t> exps);
  /// Accepts unsorted pairs with repeats; zero exponents are dropped.
  static Monomial from_factors(std::vector<VarPower> factors);

  std::vector<std::uint32_t> dense(std::size_t nvars) const;
  std::uint32_t exponent(std::uint32_t var) const;
  std::uint32_t degree() const { return degree_; }
  /// Degree restricted to the variables flagged in `mask`.
  std::uint32_t degree_in(const std::vector<bool>& mask) const;
  const std::vector<VarPower>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  Monomial with_exponent(std::uint32_t var, std::uint32_t exp) const;
  std::optional<Monomial> divide(const Monomial& other) const;

  std::size_t hash() const;
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<VarPower> factors_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order: total degree first, then the exponent of the
/// lowest layout position decides.
bool grlex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  Rational coeff;
  friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
};

/// Exact sparse multivariate polynomial.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficient, so two equal polynomials have identical term vectors.
class Polynomial {
 public:
  Polynomial(Field field, LayoutPtr layout);

  static Polynomial constant(Field field, LayoutPtr layout, const Rational& c);
  static Polynomial variable(Field field, LayoutPtr layout, std::string_view name);
  static Polynomial variable(Field field, LayoutPtr layout, std::size_t index);
  static Polynomial monomial(Field field, LayoutPtr layout, Monomial m, const Rational& c);
  /// Canonicalizes arbitrary terms: merges duplicates, reduces coefficients, drops zeros.
  static Polynomial from_terms(Field field, LayoutPtr layout, std::vector<Term> terms);

  const Field& field() const { return field_; }
  const LayoutPtr& layout() const { return layout_; }
  const VariableLayout& vars() const { return *layout_; }
  const std::vector<Term>& terms() const { return terms_; }

  std::size_t monomial_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous(unsigned degree) const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }
  /// Largest exponent of `var` over all terms.
  std::uint32_t degree_in(std::size_t var) const;
  /// Positions of variables that occur in some term.
  std::vector<std::size_t> support() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Fixes the listed variables to values; others stay symbolic.
  Polynomial substitute_values(std::span<const std::pair<std::size_t, Rational>> values) const;
  /// Re-expresses the polynomial over `target`, which must contain every variable in the support.
  Polynomial relayout(LayoutPtr target) const;
  /// Same terms over a different field; coefficients are reduced.
  Polynomial with_field(const Field& target) const;

  std::string str() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Field field_;
  LayoutPtr layout_;
  std::vector<Term> terms_;

  friend class TermAccumulator;
  void require_compatible(const Polynomial& other, const char* op) const;
};

/// Hash-map staging area for building a polynomial term by term.
class TermAccumulator {
 public:
  TermAccumulator(Field field, LayoutPtr layout) : field_(std::move(field)), layout_(std::move(layout)) {}

  void add(const Monomial& m, const Rational& c);
  void add(Monomial&& m, const Rational& c);
  void add(const Polynomial& p, const Rational& scale = 1);
  std::size_t size() const { return terms_.size(); }
  Polynomial finish() &&;

 private:
  Field field_;
  LayoutPtr layout_;
  std::unordered_map<Monomial, Rational, MonomialHash> terms_;
};

/// Ordered list of polynomials over one field and layout, read as the
/// equations p = 0. An empty system is vacuously satisfiable.
struct PolySystem {
  Field field;
  LayoutPtr layout;
  std::vector<Polynomial> polys;

  PolySystem(Field f, LayoutPtr l, std::vector<Polynomial> ps = {});

  std::size_t num_vars() const { return layout->size(); }
  int max_degree() const;
  bool is_satisfied_by(std::span<const Rational> point) const;
};

// Operations shared by every reduction.

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
std::size_t monomial_count(const Polynomial& p);

/// p(x + offset).
Polynomial shift_substitute(const Polynomial& p, std::span<const Rational> offset);

/// p(forms[0], ..., forms[k-1]); each form is an affine polynomial over the
/// target layout and the result lives on that layout.
Polynomial affine_substitute(const Polynomial& p, std::span<const Polynomial> forms);

Polynomial partial_derivative(const Polynomial& p, std::string_view var);
Polynomial partial_derivative(const Polynomial& p, std::size_t var);

/// Multiplies each monomial m by hvarA^(2 - deg_A m) * hvarB^(2 - deg_B m).
/// The homogenizing variables are appended to the layout when absent.
Polynomial homogenize_bipartite(const Polynomial& h, const std::vector<std::string>& part_a,
                                const std::vector<std::string>& part_b, const std::string& hvar_a,
                                const std::string& hvar_b);

/// Every monomial has degree exactly 2 in `part_a` and exactly 2 in `part_b`.
/// The parts must partition the layout.
bool is_biquadratic(const Polynomial& q, const std::vector<std::string>& part_a,
                    const std::vector<std::string>& part_b);

/// Every monomial has degree at most 2 in each part.
bool is_semi_biquadratic(const Polynomial& q, const std::vector<std::string>& part_a,
                         const std::vector<std::string>& part_b);

struct ComplexParts {
  Polynomial re;
  Polynomial im;
};

/// Splits p(x + i y) into real and imaginary parts, where x ranges over
/// `real_vars` (variables of p) and y over the new `imag_vars`. Variables of
/// p not listed in `real_vars` stay real. Both parts live on p's layout
/// extended by `imag_vars`.
ComplexParts complex_split(const Polynomial& p, const std::vector<std::string>& real_vars,
                           const std::vector<std::string>& imag_vars);

/// Dense coefficient list of all monomials of degree <= `degree` in
/// ascending graded-lex order.
std::vector<Rational> to_dense(const Polynomial& p, unsigned degree);
Polynomial from_dense(const Field& field, const LayoutPtr& layout, unsigned degree,
                      std::span<const Rational> coeffs);
/// Monomials of degree <= `degree` in `nvars` variables, ascending graded-lex.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned degree);

}  // namespace redux
