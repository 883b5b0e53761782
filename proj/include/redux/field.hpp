#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace redux {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient domain: a prime field GF(p) or the rationals.
///
/// Elements of both are carried as `Rational`. Over GF(p) the canonical
/// representative is an integer in [0, p); over the rationals it is the
/// fraction in lowest terms with positive denominator.
class Field {
 public:
  enum class Kind { prime, rationals };

  static Field rationals();
  /// Throws InputError unless `p` is a prime (checked by trial division).
  static Field prime(const Integer& p);

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::prime; }
  /// Modulus p; zero for the rationals.
  const Integer& modulus() const { return p_; }
  /// Field cardinality, or nullopt for the rationals.
  std::optional<Integer> size() const;

  /// Maps an arbitrary rational into the canonical representative.
  /// Over GF(p) the denominator must be invertible.
  Rational reduce(const Rational& v) const;
  void reduce_in_place(Rational& v) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }
  Rational pow(const Rational& a, unsigned long e) const;

  /// The k-th element in canonical order (0, 1, 2, ... for both kinds).
  Rational element(std::uint64_t k) const;

  /// Parses "5", "-3", "-3/2". Over GF(p), "a/b" means a * b^{-1}.
  Rational parse(std::string_view text) const;
  std::string format(const Rational& v) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

  std::string describe() const;

 private:
  Field(Kind k, Integer p) : kind_(k), p_(std::move(p)) {}
  Kind kind_;
  Integer p_;
};

bool is_prime_trial_division(const Integer& n);

}  // namespace redux
