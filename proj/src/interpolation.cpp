#include "nilab/interpolation.hpp"
#include "nilab/errors.hpp"
#include "nilab/matrix.hpp"

namespace nilab {

std::vector<Vec> interpolate_vector_poly(const std::vector<Sample>& samples, unsigned degree) {
  const std::size_t n = degree + 1;
  if (samples.size() < n)
    throw contract_error("interpolation needs at least degree+1 samples");
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].t == samples[j].t)
        throw contract_error("repeated interpolation node t = " + samples[i].t.get_str());
  const std::size_t width = samples[0].value.size();
  for (const auto& s : samples)
    if (s.value.size() != width)
      throw shape_error("interpolation samples have different lengths");

  // [V | Y] reduced to [I | C].
  Mat aug(n, n + width);
  for (std::size_t i = 0; i < n; ++i) {
    Rat p = 1;
    for (std::size_t k = 0; k < n; ++k) {
      aug(i, k) = p;
      p *= samples[i].t;
    }
    for (std::size_t c = 0; c < width; ++c)
      aug(i, n + c) = samples[i].value[c];
  }
  Echelon e = row_echelon(aug);
  std::vector<Vec> coeffs(n, Vec(width));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < width; ++c)
      coeffs[k][c] = e.reduced(k, n + c);

  for (std::size_t i = n; i < samples.size(); ++i)
    if (evaluate_vector_poly(coeffs, samples[i].t) != samples[i].value)
      throw degree_mismatch_error("samples are not reproduced by a polynomial of degree " +
                                  std::to_string(degree));
  return coeffs;
}

Vec evaluate_vector_poly(const std::vector<Vec>& coeffs, const Rat& t) {
  if (coeffs.empty())
    return {};
  // Horner
  Vec acc = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    for (auto& x : acc)
      x *= t;
    acc += coeffs[k];
  }
  return acc;
}

std::vector<std::vector<Vec>> interpolate_grid(const std::function<Vec(const Rat&, const Rat&)>& f,
                                               unsigned degree) {
  // For each fixed s, interpolate in t; then interpolate each t-coefficient in s.
  std::vector<std::vector<Vec>> by_s;  // by_s[b_node][a]
  for (unsigned sb = 0; sb <= degree; ++sb) {
    std::vector<Sample> samples;
    for (unsigned ta = 0; ta <= degree; ++ta)
      samples.push_back({Rat(ta), f(Rat(ta), Rat(sb))});
    by_s.push_back(interpolate_vector_poly(samples, degree));
  }
  std::vector<std::vector<Vec>> out(degree + 1);
  for (unsigned a = 0; a <= degree; ++a) {
    std::vector<Sample> samples;
    for (unsigned sb = 0; sb <= degree; ++sb)
      samples.push_back({Rat(sb), by_s[sb][a]});
    out[a] = interpolate_vector_poly(samples, degree);
  }
  return out;
}

} // namespace nilab
