#include "redux/field.hpp"

#include "redux/errors.hpp"

namespace redux {

bool is_prime_trial_division(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (Integer d = 3; d * d <= n; d += 2) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
  }
  return true;
}

Field Field::rationals() { return Field(Kind::rationals, 0); }

Field Field::prime(const Integer& p) {
  if (!is_prime_trial_division(p)) {
    throw InputError("field modulus " + p.get_str() + " is not prime");
  }
  return Field(Kind::prime, p);
}

std::optional<Integer> Field::size() const {
  if (kind_ == Kind::prime) return p_;
  return std::nullopt;
}

void Field::reduce_in_place(Rational& v) const {
  if (kind_ == Kind::rationals) {
    v.canonicalize();
    return;
  }
  mpz_ptr num = v.get_num_mpz_t();
  mpz_ptr den = v.get_den_mpz_t();
  if (mpz_cmp_ui(den, 1) != 0) {
    v.canonicalize();
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den, p_.get_mpz_t()) == 0) {
      throw InputError("denominator not invertible modulo " + p_.get_str());
    }
    mpz_mul(num, num, inv.get_mpz_t());
    mpz_set_ui(den, 1);
  }
  mpz_fdiv_r(num, num, p_.get_mpz_t());
}

Rational Field::reduce(const Rational& v) const {
  Rational r = v;
  reduce_in_place(r);
  return r;
}

Rational Field::add(const Rational& a, const Rational& b) const {
  Rational r = a + b;
  reduce_in_place(r);
  return r;
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  Rational r = a - b;
  reduce_in_place(r);
  return r;
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  Rational r = a * b;
  reduce_in_place(r);
  return r;
}

Rational Field::neg(const Rational& a) const {
  Rational r = -a;
  reduce_in_place(r);
  return r;
}

Rational Field::inv(const Rational& a) const {
  if (sgn(a) == 0) throw InputError("division by zero");
  Rational r = 1 / a;
  reduce_in_place(r);
  return r;
}

Rational Field::pow(const Rational& a, unsigned long e) const {
  Rational result = 1;
  Rational base = a;
  while (e > 0) {
    if (e & 1UL) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Rational Field::element(std::uint64_t k) const {
  Rational r{Integer(std::to_string(k))};
  if (kind_ == Kind::prime && Integer(std::to_string(k)) >= p_) {
    throw InputError("element index " + std::to_string(k) + " out of range for " + describe());
  }
  return r;
}

Rational Field::parse(std::string_view text) const {
  std::string s(text);
  Rational r;
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      r = Rational(Integer(s, 10));
    } else {
      Integer num(s.substr(0, slash), 10);
      Integer den(s.substr(slash + 1), 10);
      if (den == 0) throw InputError("zero denominator in coefficient '" + s + "'");
      r = Rational(num, den);
    }
  } catch (const std::invalid_argument&) {
    throw InputError("malformed coefficient '" + s + "'");
  }
  reduce_in_place(r);
  return r;
}

std::string Field::format(const Rational& v) const { return v.get_str(); }

std::string Field::describe() const {
  if (kind_ == Kind::rationals) return "QQ";
  return "GF(" + p_.get_str() + ")";
}

}  // namespace redux
