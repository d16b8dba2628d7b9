#include "orthobound/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "orthobound/bounds.hpp"
#include "orthobound/campaign.hpp"
#include "orthobound/error.hpp"
#include "orthobound/experiments.hpp"
#include "orthobound/integral.hpp"
#include "orthobound/json_io.hpp"
#include "orthobound/quadrature.hpp"

namespace orthobound {

namespace {

std::optional<double> parse_double(std::string_view text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

enum class BoundKind { Thm11, Thm2, Thm21, Eq26, Eq211, Cor23, Cor25, Thm31, Cor33, Thm41 };

struct Selector {
  BoundKind kind = BoundKind::Thm21;
  NormVariant variant = NormVariant::cbs();
  double lambda = 0.5;
};

Selector parse_selector(std::string_view s) {
  static constexpr std::pair<std::string_view, BoundKind> plain[] = {
      {"thm1.1", BoundKind::Thm11}, {"thm2", BoundKind::Thm2},   {"thm2.1", BoundKind::Thm21},
      {"eq2.6", BoundKind::Eq26},   {"cor2.3", BoundKind::Cor23}, {"cor2.5", BoundKind::Cor25},
      {"thm3.1", BoundKind::Thm31}, {"cor3.3", BoundKind::Cor33},
  };
  for (auto [name, kind] : plain) {
    if (s == name) return {kind};
  }
  if (s == "eq2.11:max") return {BoundKind::Eq211, NormVariant::max_sum()};
  if (s == "eq2.11:sum") return {BoundKind::Eq211, NormVariant::sum_max()};
  if (s.starts_with("eq2.11:holder:")) {
    if (auto p = parse_double(s.substr(14))) return {BoundKind::Eq211, NormVariant::holder(*p)};
    throw Error(ErrorKind::InvalidArgument, "bad Hoelder exponent in '" + std::string(s) + "'");
  }
  if (s.starts_with("thm4.1:")) {
    if (auto l = parse_double(s.substr(7))) return {BoundKind::Thm41, NormVariant::cbs(), *l};
    throw Error(ErrorKind::InvalidArgument, "bad lambda in '" + std::string(s) + "'");
  }
  throw Error(ErrorKind::InvalidArgument, "unknown bound selector '" + std::string(s) + "'");
}

bool needs_y(BoundKind k) {
  return k == BoundKind::Thm11 || k == BoundKind::Thm2 || k == BoundKind::Thm31 || k == BoundKind::Cor33 ||
         k == BoundKind::Thm41 || k == BoundKind::Cor25;
}

bool needs_cy(BoundKind k) {
  return k == BoundKind::Thm11 || k == BoundKind::Thm2 || k == BoundKind::Thm31 || k == BoundKind::Cor33;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, path + ": malformed JSON (" + e.what() + ")");
  }
}

// Chain tolerance: --tol beats ORTHOBOUND_TOL beats the default.
double chain_tolerance(std::optional<double> flag) {
  if (flag) {
    if (!(*flag > 0.0 && *flag < 1.0)) throw Error(ErrorKind::InvalidArgument, "--tol must lie in (0, 1)");
    return *flag;
  }
  if (const char* env = std::getenv("ORTHOBOUND_TOL")) {
    if (auto t = parse_tolerance(env)) return *t;
    throw Error(ErrorKind::InvalidArgument, "ORTHOBOUND_TOL must be a number in (0, 1), got '" + std::string(env) + "'");
  }
  return tolerance::kChainRel;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct CheckArgs {
  std::string instance;
  std::string bound;
  bool force = false;
  std::optional<double> tol;
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
  const Selector sel = parse_selector(args.bound);
  const Instance inst = instance_from_json(read_json_file(args.instance));
  if (needs_y(sel.kind) && !inst.y) throw Error(ErrorKind::InvalidArgument, "/y: missing field (needed by " + args.bound + ")");
  if (needs_cy(sel.kind) && !inst.cy) {
    throw Error(ErrorKind::InvalidArgument, "/gamma: missing field (needed by " + args.bound + ")");
  }
  if (sel.kind == BoundKind::Cor25 && !inst.delta) {
    throw Error(ErrorKind::InvalidArgument, "/delta: missing field (needed by cor2.5)");
  }
  if (sel.kind == BoundKind::Cor33 && inst.family.size() != 1) {
    throw Error(ErrorKind::InvalidArgument, "/family: cor3.3 needs exactly one member");
  }

  BoundOptions opts;
  opts.force = args.force;
  opts.chain_rel = chain_tolerance(args.tol);

  Json report;
  report["bound"] = args.bound;
  report["field"] = inst.field == Field::Real ? "real" : "complex";
  report["chain_tolerance"] = opts.chain_rel;

  Json hyp;
  bool admissible = true;
  const auto record = [&](const char* name, const HypothesisReport& r) {
    hyp[name] = to_json(r);
    admissible = admissible && r.holds;
  };
  if (sel.kind == BoundKind::Thm41) {
    if (!(sel.lambda > 0.0 && sel.lambda < 1.0)) throw Error(ErrorKind::BadLambda, "lambda must lie in (0, 1)");
    record("z", check_hypothesis(*inst.y * (1.0 - sel.lambda) + inst.x * sel.lambda, inst.family, inst.cx));
  } else if (sel.kind == BoundKind::Cor25) {
    const double ny = norm(*inst.y);
    if (ny == 0.0) throw Error(ErrorKind::ZeroVector, "/y: zero vector");
    const OrthonormalFamily unit = validate_family({*inst.y * (1.0 / ny)});
    record("x", check_hypothesis(inst.x, unit, ScalarCorridor({*inst.delta * ny}, {*inst.Delta * ny})));
  } else {
    record("x", check_hypothesis(inst.x, inst.family, inst.cx));
    if (needs_cy(sel.kind)) record("y", check_hypothesis(*inst.y, inst.family, *inst.cy));
  }
  report["hypothesis"] = hyp;

  if (!admissible && !args.force) {
    report["error"] = "HypothesisFailed: the instance violates the admissibility hypothesis (use --force to evaluate anyway)";
    emit(out, report);
    return kExitHypothesisFailed;
  }

  Json chains;
  bool all_hold = true;
  const auto add = [&](const std::string& name, const BoundChain& c) {
    chains[name] = to_json(c);
    all_hold = all_hold && c.all_hold;
  };
  const Vector& x = inst.x;
  switch (sel.kind) {
    case BoundKind::Thm11: add("eq1.3", gruss_refined_sqrt(x, *inst.y, inst.family, inst.cx, *inst.cy, opts)); break;
    case BoundKind::Thm2: add("eq1.4", gruss_refined_midpoint(x, *inst.y, inst.family, inst.cx, *inst.cy, opts)); break;
    case BoundKind::Thm21: add("eq2.1", norm_bound_quadratic(x, inst.family, inst.cx, NormVariant::cbs(), opts)); break;
    case BoundKind::Eq26: add("eq2.6", norm_bound_linear(x, inst.family, inst.cx, opts)); break;
    case BoundKind::Eq211: add("eq2.11", norm_bound_quadratic(x, inst.family, inst.cx, sel.variant, opts)); break;
    case BoundKind::Cor23: {
      const BesselCounterpart b = bessel_counterpart(x, inst.family, inst.cx, opts);
      add("eq2.12", b.chain);
      if (b.real_form) add("eq2.17", *b.real_form);
      const double bound = b.chain.values[2];
      report["ratio"] = bound > 0.0 ? Json(b.chain.values[1] / bound) : Json(nullptr);
      break;
    }
    case BoundKind::Cor25: {
      const SchwarzCounterparts s = schwarz_counterparts(x, *inst.y, *inst.delta, *inst.Delta, opts);
      add("eq2.20", s.linear);
      add("eq2.21", s.linear_defect);
      add("eq2.22", s.quadratic);
      add("eq2.23", s.quadratic_defect);
      break;
    }
    case BoundKind::Thm31:
    case BoundKind::Cor33: {
      const GrussBound g = gruss_bound(x, *inst.y, inst.family, inst.cx, *inst.cy, opts);
      add(sel.kind == BoundKind::Cor33 ? "eq3.10" : "eq3.3", g.chain);
      add("eq3.5", g.schwarz_step);
      if (g.real_square) add("eq3.7", *g.real_square);
      if (g.ratio_form) add("eq3.13", *g.ratio_form);
      break;
    }
    case BoundKind::Thm41:
      add("eq4.3", companion_bound(x, *inst.y, inst.family, inst.cx, sel.lambda, opts));
      break;
  }
  report["chains"] = chains;
  report["all_hold"] = all_hold;
  report["verified"] = admissible;
  emit(out, report);
  if (!admissible) return kExitHypothesisFailed;
  return all_hold ? kExitOk : kExitBoundViolated;
}

struct FuzzArgs {
  FuzzConfig config;
  std::string mode = "complex";
  std::string corridor = "signed";
  bool serial = false;
  std::optional<double> tol;
};

int cmd_fuzz(FuzzArgs args, std::ostream& out) {
  FuzzConfig& c = args.config;
  c.mode = args.mode == "real" ? Field::Real : Field::Complex;
  c.sign = args.corridor == "nonnegative" ? CorridorSign::NonNegative : CorridorSign::Signed;
  c.chain_rel = chain_tolerance(args.tol);
  if (c.family_size == 0) throw Error(ErrorKind::InvalidArgument, "--family must be at least 1");
  if (c.dim < c.family_size) throw Error(ErrorKind::InvalidArgument, "--dim must be at least --family");
  const FuzzSummary s = args.serial ? run_fuzz_serial(c) : run_fuzz_parallel(c);
  emit(out, to_json(s));
  return s.total_violations() == 0 ? kExitOk : kExitBoundViolated;
}

std::vector<double> split_eps(const std::string& text) {
  std::vector<double> eps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto v = parse_double(item);
    if (!v) throw Error(ErrorKind::InvalidArgument, "--eps: '" + item + "' is not a number");
    eps.push_back(*v);
  }
  return eps;
}

int cmd_sweep(const std::string& target_name, const std::string& eps_text, const std::string& path, std::ostream& out) {
  const auto target = parse_sweep_target(target_name);
  if (!target) throw Error(ErrorKind::InvalidArgument, "unknown sweep target '" + target_name + "'");
  const std::vector<double> eps = split_eps(eps_text);
  const std::vector<SweepRow> rows = sharpness_sweep(*target, eps);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  file << sweep_csv(rows);
  file.close();
  if (!file) throw Error(ErrorKind::InvalidArgument, "write to " + path + " failed");

  Json j;
  j["target"] = std::string(to_string(*target));
  j["out"] = path;
  Json list = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["epsilon"] = r.epsilon;
    row["ratio"] = r.ratio;
    list.push_back(std::move(row));
  }
  j["rows"] = std::move(list);
  emit(out, j);
  return kExitOk;
}

// Demo data: f and g are combinations of the family plus one function
// outside it, with corridors of half-width 0.2 around the coefficients.
int cmd_integral_demo(const std::string& family_name, std::size_t nodes, std::size_t count, std::ostream& out) {
  if (nodes == 0 || count == 0) throw Error(ErrorKind::InvalidArgument, "--nodes and --count must be positive");
  const bool trig = family_name == "trig";
  const QuadratureGrid grid = trig ? gauss_legendre(nodes, 0.0, 2.0 * std::numbers::pi) : gauss_legendre(nodes);
  const auto all = builtin_functions(trig ? BuiltinKind::Trig : BuiltinKind::Legendre, count + 2, grid);
  const std::vector<SampledFunction> fns(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count));

  std::vector<double> a(count), b(count), lo_a(count), hi_a(count), lo_b(count), hi_b(count);
  std::vector<double> fv(nodes, 0.0), gv(nodes, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    a[i] = 1.0 / static_cast<double>(i + 1);
    b[i] = i % 2 == 0 ? 0.5 : -0.5;
    lo_a[i] = a[i] - 0.2;
    hi_a[i] = a[i] + 0.2;
    lo_b[i] = b[i] - 0.2;
    hi_b[i] = b[i] + 0.2;
    for (std::size_t j = 0; j < nodes; ++j) {
      fv[j] += a[i] * fns[i][j].real();
      gv[j] += b[i] * fns[i][j].real();
    }
  }
  for (std::size_t j = 0; j < nodes; ++j) {
    fv[j] += 0.1 * all[count][j].real();
    gv[j] += 0.1 * all[count + 1][j].real();
  }
  const SampledFunction f = SampledFunction::real(fv);
  const SampledFunction g = SampledFunction::real(gv);
  const ScalarCorridor cf = real_corridor(lo_a, hi_a);
  const ScalarCorridor cg = real_corridor(lo_b, hi_b);
  const IntegralInstance inst = integral_instance(f, g, fns, grid, cf, cg);

  Json j;
  j["family"] = family_name;
  j["nodes"] = nodes;
  j["count"] = count;
  j["gram_residual"] = inst.family.gram_residual();
  Json hyp;
  hyp["f"] = to_json(inst.report_f);
  hyp["g"] = to_json(*inst.report_g);
  hyp["f_quadrature_cond_i"] = quadrature_condition_i(f, fns, grid, cf);
  hyp["f_quadrature_cond_ii"] = quadrature_condition_ii(f, fns, grid, cf);
  j["hypothesis"] = hyp;
  const BoundChain norm = integral_norm_bound(inst, NormVariant::cbs());
  const BesselCounterpart bessel = integral_bessel(inst);
  const GrussBound gruss = integral_gruss(inst);
  Json chains;
  chains["eq2.1"] = to_json(norm);
  chains["eq2.12"] = to_json(bessel.chain);
  chains["eq3.3"] = to_json(gruss.chain);
  j["chains"] = chains;
  const bool ok = norm.all_hold && bessel.chain.all_hold && gruss.chain.all_hold;
  j["all_hold"] = ok;
  emit(out, j);
  return ok ? kExitOk : kExitBoundViolated;
}

}  // namespace

std::optional<double> parse_tolerance(std::string_view text) {
  auto v = parse_double(text);
  if (!v || !(*v > 0.0 && *v < 1.0)) return std::nullopt;
  return v;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counterparts of Bessel's, Schwarz's and Gruss' inequalities: checks, fuzzing, sweeps"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Evaluate one bound on an instance file");
  c->add_option("--instance", check.instance, "Instance JSON")->required();
  c->add_option("--bound", check.bound,
                "thm1.1|thm2|thm2.1|eq2.6|eq2.11:{max,holder:p,sum}|cor2.3|cor2.5|thm3.1|cor3.3|thm4.1:lambda")
      ->required();
  c->add_flag("--force", check.force, "Evaluate even if the hypothesis fails");
  c->add_option("--tol", check.tol, "Relative chain tolerance (overrides ORTHOBOUND_TOL)");

  FuzzArgs fuzz;
  auto* f = app.add_subcommand("fuzz", "Run random admissible instances through every bound");
  f->add_option("--seed", fuzz.config.seed, "RNG seed")->capture_default_str();
  f->add_option("--count", fuzz.config.count, "Number of trials")->capture_default_str();
  f->add_option("--dim", fuzz.config.dim, "Space dimension")->capture_default_str();
  f->add_option("--family", fuzz.config.family_size, "Family size")->capture_default_str();
  f->add_option("--mode", fuzz.mode, "Scalar field")->check(CLI::IsMember({"real", "complex"}))->capture_default_str();
  f->add_option("--corridor", fuzz.corridor, "Corridor sign")
      ->check(CLI::IsMember({"signed", "nonnegative"}))
      ->capture_default_str();
  f->add_flag("--serial", fuzz.serial, "Use the serial reference runner");
  f->add_option("--tol", fuzz.tol, "Relative chain tolerance (overrides ORTHOBOUND_TOL)");

  std::string target, eps, path;
  auto* s = app.add_subcommand("sweep", "Sharpness sweep to CSV");
  s->add_option("--target", target, "thm21|cor23|cor32")->required();
  s->add_option("--eps", eps, "Comma-separated epsilons in (0, 1)")->required();
  s->add_option("--out", path, "Output CSV")->required();

  std::string demo_family;
  std::size_t nodes = 64, count = 5;
  auto* d = app.add_subcommand("integral-demo", "Weighted L2 instance on a Gauss-Legendre grid");
  d->add_option("--family", demo_family, "Built-in family")->required()->check(CLI::IsMember({"trig", "legendre"}));
  d->add_option("--nodes", nodes, "Grid size")->capture_default_str();
  d->add_option("--count", count, "Family size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (c->parsed()) return cmd_check(check, out);
    if (f->parsed()) return cmd_fuzz(fuzz, out);
    if (s->parsed()) return cmd_sweep(target, eps, path, out);
    return cmd_integral_demo(demo_family, nodes, count, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::HypothesisFailed ? kExitHypothesisFailed : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace orthobound
