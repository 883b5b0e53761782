#include "redux/random.hpp"

namespace redux {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{splitmix64(seed), splitmix64(seed ^ splitmix64(index + 1))};
  return std::mt19937_64(seq);
}

Rational random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Rational random_positive_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(1, bound);
  std::uniform_int_distribution<long> den(1, bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

std::vector<Rational> random_rationals(std::mt19937_64& rng, std::size_t n, long bound) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_rational(rng, bound));
  return out;
}

std::vector<Rational> random_positive_rationals(std::mt19937_64& rng, std::size_t n, long bound) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_positive_rational(rng, bound));
  return out;
}

Rational random_element(std::mt19937_64& rng, const Field& field, long bound) {
  if (!field.is_prime_field()) return random_rational(rng, bound);
  Integer r;
  // Moduli here are desk-scale; draw in 64 bits and reduce.
  std::uniform_int_distribution<unsigned long> dist(0, field.modulus().fits_ulong_p() ? field.modulus().get_ui() - 1
                                                                                       : ~0UL);
  r = dist(rng);
  r %= field.modulus();
  return Rational(r);
}

}  // namespace redux
