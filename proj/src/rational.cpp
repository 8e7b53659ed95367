#include "nilab/rational.hpp"
#include "nilab/errors.hpp"

#include <cctype>

namespace nilab {

Rat parse_rat(const std::string& text) {
  auto valid = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
      return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
    throw contract_error("malformed rational: '" + text + "'");
  Int n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0)
    throw contract_error("zero denominator: '" + text + "'");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

Rat factorial(unsigned k) {
  Int f = 1;
  for (unsigned i = 2; i <= k; ++i)
    f *= i;
  return Rat(f);
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a);
  return r += b;
}

Vec& operator+=(Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw shape_error("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += b[i];
  return a;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw shape_error("vector length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] -= b[i];
  return r;
}

Vec operator-(const Vec& a) {
  Vec r(a);
  for (auto& x : r)
    x = -x;
  return r;
}

Vec operator*(const Rat& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r)
    x *= c;
  return r;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw shape_error("vector length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
      s += a[i] * b[i];
  return s;
}

Vec zeros(std::size_t n) { return Vec(n, Rat(0)); }

Vec from_ints(std::initializer_list<long> values) {
  Vec v;
  v.reserve(values.size());
  for (long x : values)
    v.emplace_back(x);
  return v;
}

Sampler::Sampler(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Sampler::raw() { return engine_(); }

long Sampler::uniform(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

} // namespace nilab
