#include "nilab/identities.hpp"
#include "nilab/errors.hpp"

#include <set>

namespace nilab {

namespace {

std::string tag(unsigned j, std::size_t sample) {
  return "j=" + std::to_string(j) + " sample=" + std::to_string(sample);
}

std::string tag(unsigned j, std::size_t sample, unsigned k) {
  return tag(j, sample) + " k=" + std::to_string(k);
}

Element power_ad(const Element& e, Element v, unsigned times) {
  for (unsigned i = 0; i < times; ++i)
    v = bracket(e, v);
  return v;
}

} // namespace

Element random_element(const Algebra& g, Sampler& sampler, long bound) {
  Element x = g.zero();
  for (auto& c : x.coords)
    c = sampler.uniform(-bound, bound);
  return x;
}

Element random_upper_nilpotent(const Algebra& g, Sampler& sampler, long bound) {
  Element n = g.zero();
  for (auto k : g.upper_nilpotent_basis())
    n.coords[k] = sampler.uniform(-bound, bound);
  return n;
}

CheckReport verify_field_identities(const Algebra& g, unsigned j, std::size_t samples, std::uint64_t seed) {
  Sampler sampler(seed * 7919 + j);
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 0; i < samples; ++i) {
    Element x = random_element(g, sampler);
    Element y = random_element(g, sampler);
    pairs.emplace_back(std::move(x), std::move(y));
  }
  return verify_field_identities(g, j, pairs, seed);
}

CheckReport verify_field_identities(const Algebra& g, unsigned j,
                                    const std::vector<std::pair<Element, Element>>& pairs, std::uint64_t seed) {
  const unsigned m = generator(g, j).exponent;
  Sampler sampler(seed * 104729 + 31 * j + 1);
  CheckReport report;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Element& x = pairs[i].first;
    const Element& y = pairs[i].second;
    const Element z = random_element(g, sampler);
    const Element n = random_upper_nilpotent(g, sampler);
    const Element px = gradient(g, j, x);

    report.add("equivariance", "dP(x).[y,x] = [y,P(x)]",
               directional_derivative(g, j, x, bracket(y, x), 1) == bracket(y, px), tag(j, i));

    const auto txy = taylor_terms(g, j, x, y);
    const auto tyx = taylor_terms(g, j, y, x);
    bool exchange = true;
    for (unsigned k = 0; k <= m; ++k)
      exchange = exchange && txy.terms[k] == tyx.terms[m - k];
    report.add("exchange", "d^kP(x).y^(k)/k! = d^(m-k)P(y).x^(m-k)/(m-k)!", exchange, tag(j, i));

    const Element zx = bracket(z, x), zy = bracket(z, y);
    for (unsigned k = 0; k <= m; ++k) {
      Element lhs = bracket(z, factorial(k) * txy.terms[k]);
      Element rhs = mixed_term(g, j, x, zx, 1, y, k);
      if (k >= 1)
        rhs += Rat(k) * mixed_term(g, j, x, zy, 1, y, k - 1);
      report.add("propagation", "[z,d^kP(x).y^(k)] = d^(k+1)P(x).[z,x].y^(k) + k d^kP(x).[z,y].y^(k-1)", lhs == rhs,
                 tag(j, i, k));
    }

    report.add("membership", "P(x) in z(z(x))", center_of(centralizer(x)).contains(px), tag(j, i));

    const Mat adg = unipotent_ad(n);
    const Element moved = g.element(adg * x.coords);
    report.add("group_equivariance", "P(Ad(g)x) = Ad(g)P(x)",
               gradient(g, j, moved).coords == adg * px.coords, tag(j, i));
  }
  return report;
}

Sl2Vectors sl2_vectors(const Algebra& g, const Triplet& t) {
  verify_triplet(t);
  Sl2Vectors out;
  for (const auto& gen : g.generators()) {
    const unsigned j = gen.index, m = gen.exponent;
    const auto te = taylor_terms(g, j, t.h, t.e);
    const auto tf = taylor_terms(g, j, t.h, t.f);
    std::vector<Element> v, w;
    for (unsigned k = 0; k <= m; ++k) {
      v.push_back(factorial(k) * te.terms[k]);
      w.push_back(factorial(k) * tf.terms[k]);
    }
    const Element pe = gradient(g, j, t.e);
    for (unsigned k = 0; k <= m; ++k) {
      const Element next_v = k < m ? v[k + 1] : g.zero();
      const Element next_w = k < m ? w[k + 1] : g.zero();
      const Rat kk(k);
      const std::string d = "j=" + std::to_string(j) + " k=" + std::to_string(k);
      out.report.add("h_weight_v", "[h,v_jk] = 2k v_jk", bracket(t.h, v[k]) == (2 * kk) * v[k], d);
      out.report.add("raise_v", "[e,v_jk] = -2 v_j,k+1", bracket(t.e, v[k]) == Rat(-2) * next_v, d);
      out.report.add("h_weight_w", "[h,w_jk] = -2k w_jk", bracket(t.h, w[k]) == (-2 * kk) * w[k], d);
      out.report.add("lower_w", "[f,w_jk] = 2 w_j,k+1", bracket(t.f, w[k]) == Rat(2) * next_w, d);
      Rat coeff = factorial(m);
      for (unsigned i = 0; i < m - k; ++i)
        coeff *= -2;
      out.report.add("pumping", "(ad e)^(m-k) v_jk = (-2)^(m-k) m! P(e)", power_ad(t.e, v[k], m - k) == coeff * pe, d);
    }
    out.v.push_back(std::move(v));
    out.w.push_back(std::move(w));
  }
  if (!out.report.all_passed())
    throw identity_error("sl(2) vector relations failed: " + out.report.failures());
  return out;
}

CheckReport kostant_independence(const Algebra& g, const Triplet& t) {
  CheckReport report;
  std::vector<Element> values;
  for (const auto& gen : g.generators()) {
    const Element pe = gradient(g, gen.index, t.e);
    const std::string d = "j=" + std::to_string(gen.index);
    report.add("primitive", "[e,P_j(e)] = 0", bracket(t.e, pe).is_zero(), d);
    report.add("weight", "[h,P_j(e)] = 2 m_j P_j(e)", bracket(t.h, pe) == Rat(2 * gen.exponent) * pe, d);
    values.push_back(pe);
  }
  const std::size_t r = Subspace::span(g, values).dim();
  report.add("independence", "P_1(e), ..., P_r(e) linearly independent", r == g.rank(),
             "rank " + std::to_string(r) + " of " + std::to_string(g.rank()));
  if (!report.all_passed())
    throw identity_error("Kostant independence failed: " + report.failures());
  return report;
}

TriangularDecomposition triangular_decomposition(const Algebra& g, const Triplet& t) {
  const Sl2Vectors vw = sl2_vectors(g, t);
  std::vector<Element> hs, np, nm;
  for (std::size_t j = 0; j < vw.v.size(); ++j) {
    hs.push_back(vw.v[j][0]);
    for (std::size_t k = 1; k < vw.v[j].size(); ++k) {
      np.push_back(vw.v[j][k]);
      nm.push_back(vw.w[j][k]);
    }
  }
  TriangularDecomposition out{Subspace::span(g, hs), Subspace::span(g, np), Subspace::span(g, nm), {}};
  auto& rep = out.report;
  const std::size_t half = (g.dim() - g.rank()) / 2;
  rep.add("dim_h", "dim h = r", out.h_space.dim() == g.rank(), std::to_string(out.h_space.dim()));
  rep.add("dim_n_plus", "dim n+ = (dim g - r)/2", out.n_plus.dim() == half, std::to_string(out.n_plus.dim()));
  rep.add("dim_n_minus", "dim n- = (dim g - r)/2", out.n_minus.dim() == half, std::to_string(out.n_minus.dim()));
  const Subspace total = sum(sum(out.h_space, out.n_plus), out.n_minus);
  const std::size_t dims = out.h_space.dim() + out.n_plus.dim() + out.n_minus.dim();
  rep.add("direct_sum", "g = n- + h + n+ (direct)", total.dim() == g.dim() && dims == g.dim(),
          std::to_string(total.dim()) + " of " + std::to_string(g.dim()));

  std::vector<Vec> zero_piece, positive, negative;
  for (const auto& piece : h_graduation(t.h, Subspace::whole(g))) {
    auto& target = sgn(piece.eigenvalue) == 0 ? zero_piece : sgn(piece.eigenvalue) > 0 ? positive : negative;
    for (const auto& b : piece.piece.basis())
      target.push_back(b.coords);
  }
  rep.add("grading_zero", "g^(0) = h", Subspace::span(g, zero_piece) == out.h_space);
  rep.add("grading_positive", "n+ = sum of g^(l), l > 0", Subspace::span(g, positive) == out.n_plus);
  rep.add("grading_negative", "n- = sum of g^(l), l < 0", Subspace::span(g, negative) == out.n_minus);
  if (!rep.all_passed())
    throw identity_error("triangular decomposition failed: " + rep.failures());
  return out;
}

std::vector<Rat> default_shift_nodes(const Algebra& g) {
  unsigned top = 0;
  for (const auto& gen : g.generators())
    top = std::max(top, gen.exponent);
  std::vector<Rat> nodes;
  for (unsigned t = 1; t <= top + 1; ++t)
    nodes.emplace_back(t);
  return nodes;
}

ShiftRank mf_shift_rank(const Algebra& g, const Triplet& t, const std::vector<Rat>& t_samples) {
  std::vector<Element> vectors;
  for (const auto& gen : g.generators())
    for (const auto& s : t_samples)
      vectors.push_back(bracket(t.e, gradient_unchecked(g, gen.index, t.e + s * t.h)));
  std::set<Rat> nodes;
  for (const auto& s : t_samples)
    if (sgn(s) != 0)
      nodes.insert(s);
  unsigned top = 0;
  for (const auto& gen : g.generators())
    top = std::max(top, gen.exponent);
  return {Subspace::span(g, vectors).dim(), nodes.size() < top + 1};
}

} // namespace nilab
