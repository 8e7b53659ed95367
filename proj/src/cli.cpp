#include "nilab/cli.hpp"
#include "nilab/errors.hpp"
#include "nilab/identities.hpp"
#include "nilab/report.hpp"
#include "nilab/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace nilab {

namespace {

const char* command_name(Command c) {
  switch (c) {
  case Command::verify: return "verify";
  case Command::index: return "index";
  case Command::table: return "table";
  case Command::decompose: return "decompose";
  case Command::convolution: return "convolution";
  }
  return "?";
}

class usage_error : public error {
public:
  using error::error;
};

AlgebraPtr algebra_for(const RunConfig& c) {
  Family fam;
  try {
    fam = parse_family(c.family);
  } catch (const unsupported_error& e) {
    throw usage_error(e.what());
  }
  if (c.rank && c.n)
    throw usage_error("give either --rank or --n, not both");
  unsigned r = 0;
  if (c.rank) {
    r = *c.rank;
  } else if (c.n) {
    const unsigned n = *c.n;
    switch (fam) {
    case Family::A:
      r = n >= 2 ? n - 1 : 0;
      break;
    case Family::B:
      if (n % 2 == 0)
        throw usage_error("type B needs an odd matrix size");
      r = (n - 1) / 2;
      break;
    default:
      if (n % 2 == 1)
        throw usage_error("types C and D need an even matrix size");
      r = n / 2;
    }
  } else {
    throw usage_error("--rank or --n is required");
  }
  try {
    return build_algebra(fam, r);
  } catch (const unsupported_error& e) {
    throw usage_error(e.what());
  }
}

Partition partition_for(const RunConfig& c, const Algebra& g) {
  if (!c.partition)
    return principal_partition(g);
  Partition p;
  try {
    p = parse_partition(*c.partition);
  } catch (const partition_error& e) {
    throw usage_error(e.what());
  }
  if (p.size() != g.matrix_size() || !valid_for(g.family(), p))
    throw usage_error("partition " + p.to_string() + " is not valid for " + g.name());
  return p;
}

Json meta(const RunConfig& c, const Algebra& g, const std::optional<Partition>& p) {
  return Json{{"command", command_name(c.command)},
              {"family", std::string(1, family_letter(g.family()))},
              {"rank", g.rank()},
              {"n", g.matrix_size()},
              {"partition", p ? Json(p->to_string()) : Json(nullptr)},
              {"seed", c.seed},
              {"version", version}};
}

// Collects a suite into `checks`; an identity_error becomes one failed check.
template <class F>
void guarded(CheckReport& checks, const std::string& name, F&& body) {
  try {
    body();
  } catch (const error& e) {
    checks.add(name, "suite completed", false, e.what());
  }
}

int orbit_exit(const OrbitReport& o) {
  if (o.skipped)
    return exit_code::ok;
  if (!o.passed())
    return exit_code::check_failed;
  if (!o.hypothesis_ok)
    return exit_code::hypothesis_violated;
  return exit_code::ok;
}

int do_verify(const RunConfig& c, const Algebra& g, Json& doc) {
  CheckReport checks;
  Json results;
  results["algebra"] = to_json(g);
  for (const auto& gen : g.generators())
    guarded(checks, "field_identities", [&] { checks.append(verify_field_identities(g, gen.index, c.sample_count, c.seed)); });
  guarded(checks, "sl2_vectors", [&] {
    const Triplet t = principal_triplet(g);
    checks.append(sl2_vectors(g, t).report);
    checks.append(kostant_independence(g, t));
    const auto td = triangular_decomposition(g, t);
    checks.append(td.report);
    results["decomposition_dims"] = {td.h_space.dim(), td.n_plus.dim(), td.n_minus.dim()};
    const auto shift = mf_shift_rank(g, t, default_shift_nodes(g));
    const std::size_t expected = (g.dim() - centralizer(t.e).dim()) / 2;
    checks.add("shift_rank", "dim span{[e, grad phi_t(e)]} = dim(orbit)/2", shift.rank == expected,
               std::to_string(shift.rank) + " vs " + std::to_string(expected));
    results["mf_shift_rank"] = shift.rank;
    results["half_orbit_dim"] = expected;
  });
  doc["checks"] = to_json(checks);
  results["samples"] = c.sample_count;
  results["all_pass"] = checks.all_passed();
  doc["results"] = results;
  return checks.all_passed() ? exit_code::ok : exit_code::check_failed;
}

int do_index(const RunConfig& c, const Algebra& g, const Partition& p, Json& doc) {
  const OrbitReport o = run_orbit(g, p, c.seed);
  doc["checks"] = to_json(o.checks);
  Json r = to_json(o);
  r.erase("checks");
  doc["results"] = r;
  return orbit_exit(o);
}

int do_convolution(const RunConfig& c, const Algebra& g, const Partition& p, Json& doc) {
  const OrbitReport o = run_orbit(g, p, c.seed);
  doc["checks"] = to_json(o.checks);
  Json pairs = Json::array();
  for (const auto& a : o.audits) {
    Json alphas = Json::object();
    for (std::size_t k = 0; k < a.alphas.size(); ++k)
      alphas["alpha^" + std::to_string(k + 1)] = to_json(a.alphas[k]);
    pairs.push_back(Json{{"i", a.i},
                         {"j", a.j},
                         {"alphas", alphas},
                         {"c_actual", a.c_actual ? to_json(*a.c_actual) : Json(nullptr)},
                         {"c_paper", to_json(a.c_printed)},
                         {"c_derived", to_json(a.c_derived)}});
  }
  doc["results"] = Json{{"partition", p.to_string()},
                        {"hypothesis_ok", o.hypothesis_ok},
                        {"pair_exponents", o.pair_exponents},
                        {"error", o.error ? Json(*o.error) : Json(nullptr)},
                        {"pairs", pairs}};
  return orbit_exit(o);
}

int do_decompose(const Algebra& g, Json& doc) {
  CheckReport checks;
  Json results;
  guarded(checks, "triangular_decomposition", [&] {
    const Triplet t = principal_triplet(g);
    const auto td = triangular_decomposition(g, t);
    checks.append(td.report);
    auto basis = [](const Subspace& s) {
      Json a = Json::array();
      for (const auto& b : s.basis())
        a.push_back(to_json(b.matrix()));
      return a;
    };
    results["triplet"] = Json{{"h", to_json(t.h.matrix())}, {"e", to_json(t.e.matrix())}, {"f", to_json(t.f.matrix())}};
    results["h"] = basis(td.h_space);
    results["n_plus"] = basis(td.n_plus);
    results["n_minus"] = basis(td.n_minus);
  });
  doc["checks"] = to_json(checks);
  doc["results"] = results;
  return checks.all_passed() ? exit_code::ok : exit_code::check_failed;
}

int do_table(const RunConfig& c, const Algebra& g, Json& doc, std::string& csv) {
  const auto orbits = sweep(g, c.seed);
  int code = exit_code::ok;
  Json rows = Json::array();
  CheckReport summary;
  csv = orbit_csv_header() + "\n";
  for (const auto& o : orbits) {
    rows.push_back(to_json(o));
    csv += to_csv_row(o) + "\n";
    const int oc = orbit_exit(o);
    if (oc == exit_code::check_failed || (oc == exit_code::hypothesis_violated && code == exit_code::ok))
      code = oc;
    if (!o.skipped)
      summary.add("orbit " + o.partition.to_string(), "all pipeline checks pass", o.passed(),
                  o.error ? *o.error : std::string{});
  }
  doc["checks"] = to_json(summary);
  doc["results"] = Json{{"orbits", rows}};
  return code;
}

} // namespace

ParseResult parse_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on classical Lie algebras, nilpotent orbits and invariant gradients", "nilab"};
  app.require_subcommand(1);
  RunConfig cfg;
  unsigned rank = 0, n = 0;
  std::string partition;
  std::string output;
  std::string format;

  struct CommandInfo {
    Command cmd;
    const char* name;
    const char* help;
  };
  const CommandInfo specs[] = {
      {Command::verify, "verify", "gradient-field, sl(2) and decomposition identity suites"},
      {Command::index, "index", "normalizer/centre pipeline and ind(eta, delta) for one orbit"},
      {Command::table, "table", "sweep every nilpotent orbit of the algebra"},
      {Command::decompose, "decompose", "triangular decomposition bases from the principal triplet"},
      {Command::convolution, "convolution", "alpha coefficients and constant audit for one orbit"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--family", cfg.family, "A, B, C or D")->required();
    sub->add_option("--rank", rank, "rank r");
    sub->add_option("--n", n, "matrix size N");
    sub->add_option("--partition", partition, "comma-separated parts, e.g. 3,2,2");
    sub->add_option("--samples", cfg.sample_count, "random samples per generator")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for sampled checks");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", output, "output path (default: standard output)");
    subs.emplace_back(sub, s.cmd);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return {std::nullopt, exit_code::ok};
  } catch (const CLI::ParseError& e) {
    err << "nilab: " << e.what() << "\n";
    return {std::nullopt, exit_code::usage};
  }
  for (const auto& [sub, cmd] : subs) {
    if (!sub->parsed())
      continue;
    cfg.command = cmd;
    if (sub->count("--rank"))
      cfg.rank = rank;
    if (sub->count("--n"))
      cfg.n = n;
    if (sub->count("--partition"))
      cfg.partition = partition;
    if (sub->count("--output"))
      cfg.output = output;
    if (sub->count("--format"))
      cfg.format = format;
    else if (cfg.output && cfg.output->size() > 4 && cfg.output->substr(cfg.output->size() - 4) == ".csv")
      cfg.format = "csv";
  }
  return {cfg, exit_code::ok};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.sample_count < 1)
      throw usage_error("--samples must be at least 1");
    const AlgebraPtr g = algebra_for(config);
    std::optional<Partition> p;
    if (config.command == Command::index || config.command == Command::convolution)
      p = partition_for(config, *g);
    if (config.format == "csv" && config.command != Command::table)
      throw usage_error("csv output is only available for the table command");
    if (config.format != "json" && config.format != "csv")
      throw usage_error("unknown format '" + config.format + "'");

    Json doc;
    doc["meta"] = meta(config, *g, p);
    std::string csv;
    int code = exit_code::ok;
    switch (config.command) {
    case Command::verify: code = do_verify(config, *g, doc); break;
    case Command::index: code = do_index(config, *g, *p, doc); break;
    case Command::table: code = do_table(config, *g, doc, csv); break;
    case Command::decompose: code = do_decompose(*g, doc); break;
    case Command::convolution: code = do_convolution(config, *g, *p, doc); break;
    }
    const std::string text = config.format == "csv" ? csv : doc.dump(2) + "\n";
    if (config.output) {
      std::ofstream file(*config.output, std::ios::binary);
      if (!file)
        throw usage_error("cannot open output file " + *config.output);
      file << text;
    } else {
      out << text;
    }
    return code;
  } catch (const usage_error& e) {
    err << "nilab: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const partition_error& e) {
    err << "nilab: " << e.what() << "\n";
    return exit_code::usage;
  }
}

}  // namespace nilab
