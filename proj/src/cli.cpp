#include "timeprice/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "timeprice/discretizer.hpp"
#include "timeprice/instances.hpp"
#include "timeprice/io.hpp"
#include "timeprice/model.hpp"
#include "timeprice/quadrature.hpp"
#include "timeprice/solver.hpp"

namespace timeprice {

namespace {

using io::ordered_json;

void emit(const ordered_json& j, const std::string& output) {
  if (output.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    io::save_json(j, output);
  }
}

void emit_text(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write " + output);
    out << text;
  }
}

io::ReportFile make_report(const SolveResult& res,
                           const DiscreteTypeDistribution& dist) {
  io::ReportFile r;
  r.revenue = res.report.revenue;
  r.time_loss = res.report.time_loss;
  r.line = res.line.segments();
  r.pricing = res.pricing.steps();
  r.types = dist.types();
  r.decisions = res.report.decisions;
  return r;
}

const DiscreteTypeDistribution& require_discrete(
    const io::ResolvedInstance& inst) {
  if (!inst.discrete) {
    throw std::invalid_argument(
        "this command needs a discrete instance; run `discretize` first");
  }
  return *inst.discrete;
}

int cmd_solve(const std::string& input, bool posted, int k, bool oracle,
              const std::string& output) {
  io::ResolvedInstance resolved = io::resolve(io::load_instance(input));
  const DiscreteTypeDistribution& dist = require_discrete(resolved);

  std::optional<SolveResult> res;
  if (posted) {
    PostedResult p = solve_posted(dist);
    SeparationLine line({Segment{0.0, p.price}});
    PricingFunction pricing = pricing_from_separation(line);
    Report report = evaluate_discrete(line, dist);
    double revenue = report.revenue;
    res = SolveResult{std::move(line), std::move(pricing), std::move(report),
                      revenue};
  } else if (k > 0) {
    res = solve_kstep(dist, k);
  } else {
    res = solve_optimal(dist);
  }

  if (oracle) {
    if (dist.size() > 7) {
      std::cerr << "error: --oracle is limited to instances with at most 7 "
                   "types\n";
      return kExitValidation;
    }
    SolveResult ref = brute_force_optimal(dist);
    double target = posted || k > 0 ? ref.optimal_value + kTol
                                    : ref.optimal_value;
    double diff = res->optimal_value - ref.optimal_value;
    if ((posted || k > 0) ? res->optimal_value > target
                          : std::fabs(diff) > tol_scale(res->optimal_value,
                                                        ref.optimal_value)) {
      std::cerr << "error: solver revenue " << io::fmt(res->optimal_value)
                << " diverges from oracle " << io::fmt(ref.optimal_value)
                << "\n";
      return kExitDivergence;
    }
  }

  emit(io::report_to_json(make_report(*res, dist)), output);
  return kExitOk;
}

int cmd_generate(const std::string& name,
                 const std::map<std::string, double>& params,
                 const std::string& marginals_path,
                 const std::string& output) {
  io::InstanceFile inst;
  inst.kind = "generator";
  inst.gen.name = name;
  inst.gen.params = params;
  if (name == "product") {
    if (marginals_path.empty()) {
      throw std::invalid_argument("product generator needs --marginals");
    }
    std::ifstream in(marginals_path);
    if (!in) throw std::invalid_argument("cannot open " + marginals_path);
    ordered_json j;
    in >> j;
    for (const auto& e : j.at("theta_marginal")) {
      inst.gen.theta_marginal.emplace_back(io::parse_number(e.at("value")),
                                           io::parse_number(e.at("prob")));
    }
    for (const auto& e : j.at("v_marginal")) {
      inst.gen.v_marginal.emplace_back(io::parse_number(e.at("value")),
                                       io::parse_number(e.at("prob")));
    }
  }

  io::ResolvedInstance resolved = io::resolve(inst);
  io::InstanceFile out;
  if (resolved.discrete) {
    out.kind = "discrete";
    out.types = resolved.discrete->types();
  } else {
    out = inst;  // band stays a generator reference
  }
  emit(io::instance_to_json(out), output);
  return kExitOk;
}

int cmd_discretize(const std::string& input, double epsilon, bool solve,
                   const std::string& output) {
  io::ResolvedInstance resolved = io::resolve(io::load_instance(input));
  if (!resolved.continuous) {
    throw std::invalid_argument("discretize needs a continuous instance");
  }

  ordered_json j;
  if (solve) {
    CertifiedSolve cert = certified_solve(*resolved.continuous, epsilon);
    const DiscretizationResult& d = cert.discretization;
    io::InstanceFile inst{"discrete", d.dist.types(), {}};
    j = io::instance_to_json(inst);
    j["discretization"] = {{"epsilon", io::fmt(d.epsilon)},
                           {"eta", io::fmt(d.eta)},
                           {"error_bound", io::fmt(d.error_bound)},
                           {"defect", io::fmt(d.defect)}};
    io::ReportFile report = make_report(cert.result, d.dist);
    report.certification =
        io::Certification{d.epsilon, d.eta, d.error_bound};
    j["report"] = io::report_to_json(report);
    j["continuum_bounds"] = {{"lo", io::fmt(cert.continuum_lo)},
                             {"hi", io::fmt(cert.continuum_hi)}};
  } else {
    DiscretizationResult d = discretize(*resolved.continuous, epsilon);
    io::InstanceFile inst{"discrete", d.dist.types(), {}};
    j = io::instance_to_json(inst);
    j["discretization"] = {{"epsilon", io::fmt(d.epsilon)},
                           {"eta", io::fmt(d.eta)},
                           {"error_bound", io::fmt(d.error_bound)},
                           {"defect", io::fmt(d.defect)}};
  }
  emit(j, output);
  return kExitOk;
}

int cmd_export_line(const std::string& report_path, int samples,
                    double theta_max, const std::string& output) {
  io::ReportFile report = io::load_report(report_path);
  SeparationLine line(report.line);
  if (theta_max <= 0.0) {
    theta_max = line.cross_points().empty()
                    ? 1.0
                    : 1.5 * line.cross_points().back();
    if (theta_max <= 0.0) theta_max = 1.0;
  }
  std::vector<double> thetas;
  for (int i = 0; i < samples; ++i) {
    double t = samples > 1
                   ? theta_max * static_cast<double>(i) / (samples - 1)
                   : 0.0;
    thetas.push_back(t);
  }
  for (double x : line.cross_points()) thetas.push_back(x);
  std::sort(thetas.begin(), thetas.end());
  thetas.erase(std::unique(thetas.begin(), thetas.end(),
                           [](double a, double b) {
                             return std::fabs(a - b) <= 1e-12;
                           }),
               thetas.end());
  std::string csv = "theta,value,segment_index\n";
  for (double t : thetas) {
    csv += io::fmt(t) + "," + io::fmt(line.value(t)) + "," +
           std::to_string(line.active_index(t)) + "\n";
  }
  emit_text(csv, output);
  return kExitOk;
}

int cmd_eval(const std::string& instance_path, const std::string& report_path,
             const std::string& output) {
  io::ResolvedInstance resolved =
      io::resolve(io::load_instance(instance_path));
  const DiscreteTypeDistribution& dist = require_discrete(resolved);
  io::ReportFile in = io::load_report(report_path);
  SeparationLine line(in.line);
  PricingFunction pricing = pricing_from_separation(line);
  Report report = evaluate_discrete(line, dist);
  double revenue = report.revenue;
  SolveResult res{std::move(line), std::move(pricing), std::move(report),
                  revenue};
  emit(io::report_to_json(make_report(res, dist)), output);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Revenue-optimal pricing for time-sensitive buyers"};
  app.require_subcommand(1);

  std::string input, output, report_path, marginals;
  bool posted = false, oracle = false, do_solve = false;
  int k = 0, samples = 0;
  double epsilon = 0.0, theta_max = 0.0;
  std::map<std::string, double> params;
  std::string gen_name;

  auto* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("input", input)->required();
  solve->add_flag("--posted", posted, "best posted price only");
  solve->add_option("--k", k, "cap the chain at k segments");
  solve->add_flag("--oracle", oracle, "cross-check against brute force");
  solve->add_option("--output", output);

  auto* generate = app.add_subcommand("generate", "emit a named instance");
  generate->add_option("name", gen_name)->required();
  double p_k = 0, p_r = 0, p_eps = 0, p_d = 0;
  auto* ok = generate->add_option("--k", p_k);
  auto* orr = generate->add_option("--r", p_r);
  auto* oeps = generate->add_option("--eps", p_eps);
  auto* od = generate->add_option("--d", p_d);
  generate->add_option("--marginals", marginals, "marginals file for product");
  generate->add_option("--output", output);

  auto* discretize = app.add_subcommand("discretize", "grid-snap a "
                                        "continuous instance");
  discretize->add_option("input", input)->required();
  discretize->add_option("--epsilon", epsilon)->required();
  discretize->add_flag("--solve", do_solve, "also run the exact solver");
  discretize->add_option("--output", output);

  auto* export_line = app.add_subcommand("export-line", "plot-ready CSV of a "
                                         "report's separation line");
  export_line->add_option("report", report_path)->required();
  std::string format = "csv";
  export_line->add_option("--format", format)->check(CLI::IsMember({"csv"}));
  export_line->add_option("--samples", samples);
  export_line->add_option("--theta-max", theta_max);
  export_line->add_option("--output", output);

  auto* eval = app.add_subcommand("eval", "re-evaluate a report's line on an "
                                  "instance");
  eval->add_option("instance", input)->required();
  eval->add_option("report", report_path)->required();
  eval->add_option("--output", output);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (solve->parsed()) return cmd_solve(input, posted, k, oracle, output);
    if (generate->parsed()) {
      if (ok->count()) params["k"] = p_k;
      if (orr->count()) params["r"] = p_r;
      if (oeps->count()) params["eps"] = p_eps;
      if (od->count()) params["d"] = p_d;
      return cmd_generate(gen_name, params, marginals, output);
    }
    if (discretize->parsed()) {
      return cmd_discretize(input, epsilon, do_solve, output);
    }
    if (export_line->parsed()) {
      return cmd_export_line(report_path, samples, theta_max, output);
    }
    if (eval->parsed()) return cmd_eval(input, report_path, output);
  } catch (const QuadratureError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitValidation;
}

}  // namespace timeprice
