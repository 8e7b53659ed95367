#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace nilab {

/// Arbitrary precision rational. GMP keeps every value canonical
/// (reduced, positive denominator) after each arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;
using Vec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q", or "p" for integers.
inline std::string to_string(const Rat& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q"; throws contract_error on malformed input.
Rat parse_rat(const std::string& text);

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0)
      return false;
  return true;
}

Rat factorial(unsigned k);

// Small vector helpers used all over the algebra code.
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rat& c, const Vec& v);
Vec& operator+=(Vec& a, const Vec& b);
Rat dot(const Vec& a, const Vec& b);
Vec zeros(std::size_t n);
Vec from_ints(std::initializer_list<long> values);

/// Deterministic pseudo-random integers in [lo, hi]. The raw mt19937_64 stream
/// is fully specified by the standard, which keeps seeded runs reproducible
/// across standard library implementations.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed);
  long uniform(long lo, long hi);
  std::uint64_t raw();

private:
  std::mt19937_64 engine_;
};

} // namespace nilab
