#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "crofton/grassmann.hpp"
#include "crofton/serialize.hpp"
#include "crofton/suites.hpp"

namespace crofton::cli {

namespace {

const std::vector<std::string> kCatalogNames = {"cube", "simplex", "crosspolytope"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

double parse_number(const std::string& tok) {
  if (tok == "inf" || tok == "+inf") return std::numeric_limits<double>::infinity();
  if (tok == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  const double v = std::stod(tok, &used);
  if (used != tok.size()) throw UsageError("not a number: '" + tok + "'");
  return v;
}

std::string alpha_string(const TensorF& t, std::size_t i) {
  std::string s;
  for (int a : t.space().alpha(i)) s += (s.empty() ? "" : " ") + std::to_string(a);
  return s;
}

void write_tensor_csv(std::ostream& out, const TensorF& t) {
  out << "alpha,value\n";
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < t.size(); ++i) os << alpha_string(t, i) << ',' << t[i] << '\n';
  out << os.str();
}

Params effective(const RunConfig& cfg, const Polytope& body) {
  Params p = cfg.params;
  if (!cfg.n_given) p.n = body.dim();
  if (p.n != body.dim())
    throw UsageError("--n " + std::to_string(p.n) + " differs from the body dimension " + std::to_string(body.dim()));
  return p;
}

}  // namespace

Polytope load_body(const std::string& spec) {
  if (spec.empty()) throw UsageError("a body is required (--body cube:3 or a JSON file)");
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string name = spec.substr(0, colon);
    if (std::find(kCatalogNames.begin(), kCatalogNames.end(), name) != kCatalogNames.end()) {
      int n = 0;
      try {
        n = std::stoi(spec.substr(colon + 1));
      } catch (const std::exception&) {
        throw UsageError("bad catalog dimension in '" + spec + "'");
      }
      return catalog(name, n);
    }
  }
  std::ifstream in(spec);
  if (!in) throw UsageError("cannot open body file '" + spec + "'");
  return polytope_from_json(Json::parse(in));
}

std::optional<Box> parse_box(const std::string& spec, int n) {
  if (spec.empty() || spec == "all") return std::nullopt;
  std::string s = spec;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<double> v;
  for (std::string tok; in >> tok;) v.push_back(parse_number(tok));
  if (static_cast<int>(v.size()) != 2 * n)
    throw UsageError("--box needs 2n = " + std::to_string(2 * n) + " numbers (lows then highs) or 'all'");
  Box b = Box::everything(n);
  for (int d = 0; d < n; ++d) {
    b.lo[d] = v[d];
    b.hi[d] = v[n + d];
    if (b.lo[d] > b.hi[d]) throw UsageError("--box has lo > hi in coordinate " + std::to_string(d + 1));
  }
  return b;
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  if (cfg.formula.empty()) throw UsageError("--formula is required");
  const CoefficientTable t = coefficient_table(parse_formula(cfg.formula), cfg.params);
  if (cfg.format == OutputFormat::csv)
    out << table_to_csv(t);
  else
    write_json(out, table_to_json(t));
  return kOk;
}

int cmd_tensor(const RunConfig& cfg, std::ostream& out) {
  const Polytope body = load_body(cfg.body);
  const Params p = effective(cfg, body);
  const auto box = parse_box(cfg.box, body.dim());
  const MeasureSpec spec{body.dim(), p.j, p.r, p.s, cfg.eps, MeasureKind::extrinsic};
  const MeasureValue m = measure(body, spec, box ? &*box : nullptr);
  if (cfg.format == OutputFormat::csv) {
    write_tensor_csv(out, m.value);
  } else {
    Json j = measure_to_json(m);
    j["body"] = cfg.body;
    j["boxed"] = box.has_value();
    write_json(out, j);
  }
  return kOk;
}

int cmd_identities(const RunConfig& cfg, std::ostream& out) {
  const auto reports = run_suite(cfg.suite);
  bool pass = true;
  Json results = Json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass();
    Json failures = Json::array();
    for (std::size_t i = 0; i < r.failures.size() && i < 50; ++i) failures.push_back(r.failures[i]);
    results.push_back({{"name", r.name},
                       {"checks", r.checks},
                       {"failed", r.failures.size()},
                       {"pass", r.pass()},
                       {"max_error", r.max_error},
                       {"failures", failures}});
  }
  if (cfg.format == OutputFormat::csv) {
    out << "name,checks,failed,pass\n";
    for (const auto& r : reports)
      out << '"' << r.name << "\"," << r.checks << ',' << r.failures.size() << ',' << (r.pass() ? "true" : "false")
          << '\n';
  } else {
    write_json(out, {{"suite", cfg.suite}, {"pass", pass}, {"results", results}});
  }
  return pass ? kOk : kCheckFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.formula.empty()) throw UsageError("--formula is required");
  const Formula f = parse_formula(cfg.formula);
  const Polytope body = load_body(cfg.body);
  const auto box = parse_box(cfg.box, body.dim());
  CroftonQuery q;
  q.formula = f;
  q.params = effective(cfg, body);
  q.box = box ? &*box : nullptr;
  coefficient_table(f, q.params);  // validate before sampling
  MCSettings mc;
  mc.samples = cfg.samples;
  mc.seed = cfg.seed;
  mc.workers = cfg.workers;
  mc.threshold = cfg.threshold;
  const VerificationReport rep = verify(body, q, mc);
  if (cfg.format == OutputFormat::csv) {
    out << verification_csv_header() << verification_csv_row(rep);
  } else {
    Json j = verification_to_json(rep);
    j["body"] = cfg.body;
    write_json(out, j);
  }
  return rep.comparison.pass ? kOk : kCheckFailed;
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
  if (cfg.catalog_name.empty()) {
    if (cfg.format == OutputFormat::csv) {
      out << "name\n";
      for (const auto& n : kCatalogNames) out << n << '\n';
    } else {
      write_json(out, {{"names", kCatalogNames}});
    }
    return kOk;
  }
  if (std::find(kCatalogNames.begin(), kCatalogNames.end(), cfg.catalog_name) == kCatalogNames.end())
    throw UsageError("unknown catalog body '" + cfg.catalog_name + "'");
  const int n = cfg.catalog_dim > 0 ? cfg.catalog_dim : cfg.params.n;
  const Polytope p = catalog(cfg.catalog_name, n);
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(std::vector<double>(v.data(), v.data() + v.size()));
  if (cfg.format == OutputFormat::csv) {
    for (int d = 0; d < n; ++d) out << (d ? "," : "") << 'x' << d + 1;
    out << '\n';
    for (const auto& v : p.vertices())
      for (int d = 0; d < n; ++d) out << v[d] << (d + 1 < n ? ',' : '\n');
  } else {
    Json faces = Json::array();
    for (int j = 0; j <= n; ++j) faces.push_back(p.faces(j).size());
    write_json(out, {{"name", cfg.catalog_name}, {"dim", n}, {"vertices", verts}, {"face_counts", faces}});
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* w = std::getenv("CROFTON_WORKERS")) {
    try {
      cfg.workers = std::max(1, std::stoi(w));
    } catch (const std::exception&) {
      err << "warning: ignoring CROFTON_WORKERS='" << w << "'\n";
    }
  }
  std::string format = "json", config_path;

  CLI::App app{"Crofton formulae for tensorial curvature measures: coefficients, tensors, checks"};
  app.require_subcommand(0, 1);
  app.add_option("--config", config_path, "JSON file whose keys mirror the command-line flags");

  struct Binding {
    std::string key;
    CLI::Option* opt;
    std::function<void(const Json&)> set;
  };
  std::map<std::string, std::vector<Binding>> bindings;
  auto bind = [&](CLI::App* sub, const std::string& key, auto& field, const std::string& help) {
    CLI::Option* opt = sub->add_option("--" + key, field, help);
    bindings[sub->get_name()].push_back({key, opt, [&field](const Json& j) {
                                           using T = std::decay_t<decltype(field)>;
                                           field = j.get<T>();
                                         }});
    return opt;
  };
  auto bind_params = [&](CLI::App* sub, bool with_i) {
    bind(sub, "n", cfg.params.n, "ambient dimension");
    bind(sub, "k", cfg.params.k, "flat dimension");
    bind(sub, "j", cfg.params.j, "measure index");
    bind(sub, "s", cfg.params.s, "tensor rank of the normal part");
    bind(sub, "r", cfg.params.r, "tensor rank of the position part");
    if (with_i) bind(sub, "i", cfg.params.i, "power of the metric weight Q(E)");
  };
  auto bind_format = [&](CLI::App* sub) {
    bind(sub, "format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    bind(sub, "output", cfg.output, "output file (default stdout)");
  };

  CLI::App* coeffs = app.add_subcommand("coeffs", "exact coefficient table of a Crofton formula");
  bind(coeffs, "formula", cfg.formula, "formula id");
  bind_params(coeffs, true);
  bind_format(coeffs);

  CLI::App* tensor = app.add_subcommand("tensor", "tensorial curvature measure of a polytope");
  bind(tensor, "body", cfg.body, "cube:3, simplex:n, crosspolytope:n or a JSON file");
  bind(tensor, "box", cfg.box, "'all' or lows then highs, e.g. \"-inf,-inf,-inf,0.5,0.7,inf\"");
  bind(tensor, "eps", cfg.eps, "0 or 1 (generalized measure)");
  bind_params(tensor, false);
  bind_format(tensor);

  CLI::App* identities = app.add_subcommand("identities", "run an identity suite");
  bind(identities, "suite", cfg.suite, "gamma, coefficients, measures or all")
      ->check(CLI::IsMember(suite_names()));
  bind_format(identities);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Monte Carlo check of a Crofton formula");
  bind(verify_cmd, "formula", cfg.formula, "formula id");
  bind(verify_cmd, "body", cfg.body, "cube:3, simplex:n, crosspolytope:n or a JSON file");
  bind(verify_cmd, "box", cfg.box, "'all' or lows then highs");
  bind_params(verify_cmd, true);
  bind(verify_cmd, "samples", cfg.samples, "number of sampled flats");
  bind(verify_cmd, "seed", cfg.seed, "random seed");
  bind(verify_cmd, "workers", cfg.workers, "worker threads (default $CROFTON_WORKERS or 1)");
  bind(verify_cmd, "threshold", cfg.threshold, "maximal |z| per component");
  bind_format(verify_cmd);

  CLI::App* cat = app.add_subcommand("catalog", "list catalog bodies or print one");
  bind(cat, "name", cfg.catalog_name, "cube, simplex or crosspolytope");
  bind(cat, "n", cfg.catalog_dim, "dimension");
  bind_format(cat);

  std::vector<std::string> args;
  for (int a = argc - 1; a >= 1; --a) args.emplace_back(argv[a]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    Json config = Json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw UsageError("cannot open config file '" + config_path + "'");
      config = Json::parse(in);
      if (!config.is_object()) throw UsageError("config file must hold a JSON object");
    }
    const auto chosen = app.get_subcommands();
    if (!chosen.empty())
      cfg.command = chosen.front()->get_name();
    else if (config.contains("command"))
      cfg.command = config["command"].get<std::string>();
    if (cfg.command.empty()) {
      err << app.help();
      return kUsageError;
    }
    if (!bindings.count(cfg.command)) throw UsageError("unknown command '" + cfg.command + "'");
    const auto& bs = bindings[cfg.command];
    for (const auto& [key, value] : config.items()) {
      if (key == "command") continue;
      auto it = std::find_if(bs.begin(), bs.end(), [&](const Binding& b) { return b.key == key; });
      if (it == bs.end()) throw UsageError("config key '" + key + "' is not an option of " + cfg.command);
      if (it->opt->count() == 0) it->set(value);
    }
    for (const auto& b : bs)
      if (b.key == "n") cfg.n_given = b.opt->count() > 0 || config.contains("n");
    if (format != "json" && format != "csv") throw UsageError("--format must be json or csv");
    cfg.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;

    std::ofstream file;
    if (!cfg.output.empty()) {
      file.open(cfg.output);
      if (!file) throw UsageError("cannot write '" + cfg.output + "'");
    }
    std::ostream& sink = cfg.output.empty() ? out : file;
    if (cfg.command == "coeffs") return cmd_coeffs(cfg, sink);
    if (cfg.command == "tensor") return cmd_tensor(cfg, sink);
    if (cfg.command == "identities") return cmd_identities(cfg, sink);
    if (cfg.command == "verify") return cmd_verify(cfg, sink);
    return cmd_catalog(cfg, sink);
  } catch (const PreconditionError& e) {
    err << "error: precondition violated: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    err << "error: bad JSON: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace crofton::cli
