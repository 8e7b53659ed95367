#include "nilab/report.hpp"

namespace nilab {

Json to_json(const Rat& q) { return q.get_str(); }

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v)
    a.push_back(x.get_str());
  return a;
}

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows.push_back(to_json(m.row_vec(r)));
  return rows;
}

Json to_json(const Element& x) { return Json{{"coords", to_json(x.coords)}, {"matrix", to_json(x.matrix())}}; }

Json to_json(const CheckReport& report) {
  Json a = Json::array();
  for (const auto& c : report.checks)
    a.push_back(Json{{"name", c.name}, {"paper_ref", c.formula}, {"pass", c.pass}, {"details", c.details}});
  return a;
}

Json to_json(const Algebra& g) {
  Json gens = Json::array();
  for (const auto& gen : g.generators())
    gens.push_back(Json{{"j", gen.index},
                        {"degree", gen.degree},
                        {"exponent", gen.exponent},
                        {"kind", gen.kind == GeneratorKind::pfaffian ? "pfaffian" : "trace_power"}});
  return Json{{"type", g.type_label()},
              {"name", g.name()},
              {"rank", g.rank()},
              {"matrix_size", g.matrix_size()},
              {"dim", g.dim()},
              {"simple", g.simple()},
              {"form_scale", to_json(g.form_scale())},
              {"killing_ratio", to_json(g.killing_ratio())},
              {"duplicated_exponents", g.duplicated_exponents()},
              {"generators", gens},
              {"basis", g.basis_labels()}};
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  if (!v)
    return nullptr;
  if constexpr (std::is_same_v<T, Rat>)
    return to_json(*v);
  else
    return *v;
}

} // namespace

Json to_json(const OrbitReport& o) {
  Json audits = Json::array();
  for (const auto& a : o.audits)
    audits.push_back(Json{{"i", a.i},
                          {"j", a.j},
                          {"alphas", to_json(a.alphas)},
                          {"c_actual", optional_json(a.c_actual)},
                          {"c_paper", to_json(a.c_printed)},
                          {"c_derived", to_json(a.c_derived)}});
  Json betas = Json::array();
  for (const auto& b : o.betas)
    betas.push_back(to_json(b));
  return Json{{"algebra", o.algebra},
              {"partition", o.partition.to_string()},
              {"skipped", o.skipped},
              {"extended_scope", o.extended_scope},
              {"note", o.note},
              {"error", o.error ? Json(*o.error) : Json(nullptr)},
              {"dims", Json{{"g", o.dim_g}, {"z", o.dim_z}, {"delta", o.dim_delta}, {"eta", o.dim_eta}}},
              {"selected_generators", o.selected},
              {"pair_exponents", o.pair_exponents},
              {"s", o.selected.size()},
              {"distinct_exponents", o.distinct_exponents},
              {"hypothesis_ok", o.hypothesis_ok},
              {"ind", optional_json(o.ind)},
              {"generic_rank", optional_json(o.generic_rank)},
              {"rank_sample_points", o.rank_sample_points},
              {"det", o.det},
              {"epsilon", optional_json(o.epsilon)},
              {"betas", betas},
              {"gamma", optional_json(o.gamma)},
              {"convolution", audits},
              {"checks", to_json(o.checks)},
              {"pass", o.passed()}};
}

std::string orbit_csv_header() { return "partition,dim_delta,s,ind,hypothesis_ok,gamma_nonzero"; }

std::string to_csv_row(const OrbitReport& o) {
  std::string row = "\"" + o.partition.to_string() + "\",";
  row += o.skipped ? "," : std::to_string(o.dim_delta) + ",";
  row += o.skipped ? "," : std::to_string(o.selected.size()) + ",";
  row += (o.ind ? std::to_string(*o.ind) : "") + ",";
  row += o.skipped ? "," : std::string(o.hypothesis_ok ? "true" : "false") + ",";
  row += o.gamma ? (sgn(*o.gamma) != 0 ? "true" : "false") : "";
  return row;
}

} // namespace nilab
