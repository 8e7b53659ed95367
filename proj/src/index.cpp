#include "nilab/index.hpp"
#include "nilab/errors.hpp"
#include "nilab/invariants.hpp"

#include <algorithm>

namespace nilab {

PairData build_pair_data(const Algebra& g, const Triplet& t) {
  verify_triplet(t);
  PairData pd;
  pd.algebra = &g;
  pd.triplet = t;
  pd.zcent = centralizer(t.e);
  pd.delta = center_of(pd.zcent);
  pd.distinct_exponents = !g.duplicated_exponents();
  for (const auto& gen : g.generators())
    pd.gradients_at_e.push_back(gradient(g, gen.index, t.e));

  std::vector<Element> chosen;
  bool independent = true;
  for (const auto& gen : g.generators()) {
    const Element& pe = pd.gradients_at_e[gen.index - 1];
    if (pe.is_zero())
      continue;
    chosen.push_back(pe);
    bool grows = Subspace::span(g, chosen).dim() == chosen.size();
    if (!grows) {
      chosen.pop_back();
      independent = false;
      continue;
    }
    pd.selected.push_back(gen.index);
    pd.pair_exponents.push_back(gen.exponent);
  }
  if (pd.distinct_exponents) {
    pd.selection_note = independent ? "nonzero P_j(e) form the candidate basis"
                                    : "nonzero P_j(e) are linearly dependent";
  } else {
    pd.selection_note = "repeated exponents: independent subfamily chosen greedily by ascending degree; "
                        "distinct-exponent conclusions not claimed";
  }
  pd.z_vec = chosen;
  Subspace spanned = Subspace::span(g, chosen);
  pd.hypothesis_ok = (!pd.distinct_exponents || independent) && spanned == pd.delta;
  pd.eta = normalizer_of(pd.zcent);
  for (auto j : pd.selected)
    pd.y_vec.push_back(directional_derivative(g, j, t.e, t.h, 1));
  return pd;
}

void require_hypothesis(const PairData& pd) {
  if (!pd.hypothesis_ok)
    throw hypothesis_error("the centre of z(e) is not spanned by the gradients P_j(e)");
}

CheckReport pair_relations_check(const PairData& pd) {
  require_hypothesis(pd);
  const Algebra& g = *pd.algebra;
  const Triplet& t = pd.triplet;
  CheckReport rep;
  for (std::size_t j = 0; j < pd.s(); ++j) {
    const Rat m(pd.pair_exponents[j]);
    const std::string d = "j=" + std::to_string(j + 1);
    rep.add("e_bracket_y", "[e,y_j] = -2m'_j z_j", bracket(t.e, pd.y_vec[j]) == (-2 * m) * pd.z_vec[j], d);
    rep.add("f_bracket_z", "[f,z_j] = -y_j", bracket(t.f, pd.z_vec[j]) == -pd.y_vec[j], d);
    rep.add("y_outside_z", "y_j not in z(e)", !pd.zcent.contains(pd.y_vec[j]), d);
    rep.add("y_in_eta", "y_j in eta", pd.eta.contains(pd.y_vec[j]), d);
    rep.add("h_weight_y", "[h,y_j] = 2(m'_j - 1) y_j", bracket(t.h, pd.y_vec[j]) == (2 * (m - 1)) * pd.y_vec[j], d);
    rep.add("h_weight_z", "[h,z_j] = 2m'_j z_j", bracket(t.h, pd.z_vec[j]) == (2 * m) * pd.z_vec[j], d);
  }
  const Subspace ys = Subspace::span(g, pd.y_vec);
  const Subspace total = sum(pd.zcent, ys);
  rep.add("eta_decomposition", "eta = z + span{y_j} (direct)",
          total == pd.eta && total.dim() == pd.zcent.dim() + ys.dim() && ys.dim() == pd.s(),
          "dim eta = " + std::to_string(pd.eta.dim()));
  rep.add("eta_dimension", "dim eta = dim z + dim delta", pd.eta.dim() == pd.zcent.dim() + pd.delta.dim(),
          std::to_string(pd.eta.dim()) + " = " + std::to_string(pd.zcent.dim()) + " + " +
              std::to_string(pd.delta.dim()));
  if (!rep.all_passed())
    throw identity_error("normalizer decomposition failed: " + rep.failures());
  return rep;
}

std::vector<std::string> delta_variables(std::size_t dim) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < dim; ++i)
    v.push_back("t" + std::to_string(i + 1));
  return v;
}

PolyMat BracketTensor::as_linear_forms() const {
  const std::size_t dim = delta_coords.empty() ? 0 : delta_coords[0][0].size();
  const auto vars = delta_variables(dim);
  PolyMat m;
  for (const auto& row : delta_coords) {
    std::vector<Poly> r;
    for (const auto& c : row)
      r.push_back(Poly::linear(vars, c));
    m.push_back(std::move(r));
  }
  return m;
}

BracketTensor bracket_matrix(const PairData& pd) {
  require_hypothesis(pd);
  const std::size_t s = pd.s();
  BracketTensor a;
  a.entries.assign(s, std::vector<Element>(s));
  a.delta_coords.assign(s, std::vector<Vec>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      a.entries[i][j] = bracket(pd.y_vec[i], pd.z_vec[j]);
      auto c = pd.delta.coordinates(a.entries[i][j]);
      if (!c)
        throw identity_error("[y_" + std::to_string(i + 1) + ", z_" + std::to_string(j + 1) + "] is not in delta");
      a.delta_coords[i][j] = std::move(*c);
    }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (a.entries[i][j] != a.entries[j][i])
        throw identity_error("bracket matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")");
  return a;
}

StructureChecks structure_checks(const PairData& pd, const BracketTensor& a) {
  require_hypothesis(pd);
  const std::size_t s = pd.s();
  const auto& mp = pd.pair_exponents;
  const Element& h = pd.triplet.h;
  StructureChecks out;
  auto& rep = out.report;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      const Element& x = a.entries[i][j];
      const unsigned target = mp[i] + mp[j] - 1;
      const std::string d = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (std::find(mp.begin(), mp.end(), target) == mp.end())
        rep.add("vanishing", "[y_i,z_j] = 0 if m'_i + m'_j - 1 is not an exponent", x.is_zero(), d);
      if (i + j + 2 > s + 1)
        rep.add("pseudo_triangular", "[y_i,z_j] = 0 for i + j > s + 1", x.is_zero(), d);
      rep.add("h_weight", "[h,[y_i,z_j]] = 2(m'_i + m'_j - 1)[y_i,z_j]",
              bracket(h, x) == Rat(2 * static_cast<long>(target)) * x, d);
    }
  const Element& zs = pd.z_vec.back();
  std::size_t lead = 0;
  while (sgn(zs.coords[lead]) == 0)
    ++lead;
  for (std::size_t i = 0; i < s; ++i) {
    const Element& x = a.entries[i][s - 1 - i];
    Rat beta = x.coords[lead] / zs.coords[lead];
    out.betas.push_back(beta);
    rep.add("antidiagonal", "[y_i,z_(s+1-i)] = beta_i z_s", x == beta * zs,
            "i=" + std::to_string(i + 1) + " beta=" + beta.get_str());
  }
  if (!rep.all_passed())
    throw identity_error("bracket matrix structure failed: " + rep.failures());
  return out;
}

IndexResult index_pair(const PairData& pd, const BracketTensor& a, std::uint64_t seed) {
  require_hypothesis(pd);
  IndexResult out;
  const PolyMat forms = a.as_linear_forms();
  out.rank = generic_rank(forms, seed);
  out.ind = pd.delta.dim() - out.rank.rank;
  out.det_nonzero = forms.size() == pd.delta.dim() && !poly_det(forms).is_zero();
  out.consistent = (out.ind == 0) == out.det_nonzero;
  return out;
}

DetShape det_shape_check(const PairData& pd, const BracketTensor& a, const std::vector<Rat>& betas) {
  require_hypothesis(pd);
  const std::size_t s = pd.s();
  if (betas.size() != s)
    throw identity_error("one beta per row expected");
  DetShape out;
  const auto vars = delta_variables(pd.delta.dim());
  out.det = poly_det(a.as_linear_forms());
  out.zs_form = Poly::linear(vars, *pd.delta.coordinates(pd.z_vec.back()));
  out.epsilon = (s * (s - 1) / 2) % 2 == 0 ? 1 : -1;
  out.gamma = out.epsilon;
  for (const auto& b : betas)
    out.gamma *= b;
  out.expected = out.gamma * out.zs_form.pow(static_cast<unsigned>(s));
  out.regular = pd.zcent.dim() == pd.algebra->rank();
  out.report.add("det_shape", "det A = eps beta_1...beta_s (Q_s(e))^s", out.det == out.expected,
                 "det = " + out.det.to_string() + ", eps = " + out.epsilon.get_str());
  if (out.regular)
    out.report.add("gamma_nonzero", "det A = gamma (P_r(e))^r, gamma != 0", sgn(out.gamma) != 0,
                   "gamma = " + out.gamma.get_str());
  if (!out.report.all_passed())
    throw identity_error("determinant shape failed: " + out.report.failures());
  return out;
}

Convolution convolution_at(const PairData& pd, std::size_t i, std::size_t j) {
  require_hypothesis(pd);
  if (i >= pd.s() || j >= pd.s())
    throw contract_error("convolution pair index out of range");
  const Algebra& g = *pd.algebra;
  const Element& e = pd.triplet.e;
  Convolution c;
  c.i = i;
  c.j = j;
  const Rat mi(pd.pair_exponents[i]), mj(pd.pair_exponents[j]);
  c.d_ij = directional_derivative(g, pd.selected[i], e, pd.z_vec[j], 1);
  c.d_ji = directional_derivative(g, pd.selected[j], e, pd.z_vec[i], 1);
  c.bracket = bracket(pd.y_vec[i], pd.z_vec[j]);
  c.grad = c.d_ij + c.d_ji;
  c.c_printed = mi * mj / (mi + mj);
  c.c_derived = 2 * mi * mj / (mi + mj);

  const std::string d = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  auto& rep = c.report;
  rep.add("bracket_derivative", "[y_i,z_j] = 2m'_j dQ_i(e).Q_j(e)", c.bracket == (2 * mj) * c.d_ij, d);
  rep.add("symmetry", "[y_i,z_j] = [y_j,z_i]", c.bracket == bracket(pd.y_vec[j], pd.z_vec[i]), d);

  Mat zmat = Mat::from_columns([&] {
    std::vector<Vec> cols;
    for (const auto& z : pd.z_vec)
      cols.push_back(z.coords);
    return cols;
  }(), g.dim());
  auto alphas = solve(zmat, c.grad.coords);
  if (!alphas)
    throw identity_error("gradient of omega" + d + " at e is not in delta");
  c.alphas = *alphas;

  if (!c.grad.is_zero()) {
    std::size_t lead = 0;
    while (sgn(c.grad.coords[lead]) == 0)
      ++lead;
    Rat ratio = c.bracket.coords[lead] / c.grad.coords[lead];
    rep.add("proportional", "[y_i,z_j] parallel to grad omega_ij(e)", c.bracket == ratio * c.grad, d);
    c.c_actual = ratio;
    rep.add("constant", "[y_i,z_j] = 2m'_i m'_j/(m'_i + m'_j) grad omega_ij(e)", ratio == c.c_derived,
            "observed " + ratio.get_str() + ", printed " + c.c_printed.get_str());
  } else {
    rep.add("proportional", "[y_i,z_j] parallel to grad omega_ij(e)", c.bracket.is_zero(), d + " zero gradient");
  }
  if (!rep.all_passed())
    throw identity_error("convolution relations failed: " + rep.failures());
  return c;
}

} // namespace nilab
