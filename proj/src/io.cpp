#include "timeprice/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "timeprice/instances.hpp"

namespace timeprice::io {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double parse_number(const ordered_json& j) {
  if (j.is_string()) return std::stod(j.get<std::string>());
  if (j.is_number()) return j.get<double>();
  throw std::invalid_argument("expected a number or numeric string");
}

namespace {

ordered_json marginal_to_json(
    const std::vector<std::pair<double, double>>& marginal) {
  ordered_json arr = ordered_json::array();
  for (const auto& [value, prob] : marginal) {
    arr.push_back({{"value", fmt(value)}, {"prob", fmt(prob)}});
  }
  return arr;
}

std::vector<std::pair<double, double>> marginal_from_json(
    const ordered_json& arr) {
  std::vector<std::pair<double, double>> marginal;
  for (const auto& e : arr) {
    marginal.emplace_back(parse_number(e.at("value")),
                          parse_number(e.at("prob")));
  }
  return marginal;
}

void check_schema(const ordered_json& j) {
  if (!j.contains("schema") || j.at("schema").get<int>() != 1) {
    throw std::invalid_argument("unsupported or missing schema version");
  }
}

ordered_json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("parse error in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

ordered_json instance_to_json(const InstanceFile& inst) {
  ordered_json j;
  j["schema"] = 1;
  j["kind"] = inst.kind;
  if (inst.kind == "discrete") {
    ordered_json arr = ordered_json::array();
    for (const BuyerType& t : inst.types) {
      arr.push_back({{"theta", fmt(t.theta)},
                     {"v", fmt(t.v)},
                     {"prob", fmt(t.prob)}});
    }
    j["types"] = arr;
  } else {
    j["name"] = inst.gen.name;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : inst.gen.params) params[key] = fmt(value);
    j["params"] = params;
    if (inst.gen.name == "product") {
      j["theta_marginal"] = marginal_to_json(inst.gen.theta_marginal);
      j["v_marginal"] = marginal_to_json(inst.gen.v_marginal);
    }
  }
  return j;
}

InstanceFile instance_from_json(const ordered_json& j) {
  check_schema(j);
  InstanceFile inst;
  inst.kind = j.at("kind").get<std::string>();
  if (inst.kind == "discrete") {
    for (const auto& e : j.at("types")) {
      inst.types.push_back(BuyerType{parse_number(e.at("theta")),
                                     parse_number(e.at("v")),
                                     parse_number(e.at("prob"))});
    }
  } else if (inst.kind == "generator") {
    inst.gen.name = j.at("name").get<std::string>();
    if (j.contains("params")) {
      for (const auto& [key, value] : j.at("params").items()) {
        inst.gen.params[key] = parse_number(value);
      }
    }
    if (j.contains("theta_marginal")) {
      inst.gen.theta_marginal = marginal_from_json(j.at("theta_marginal"));
    }
    if (j.contains("v_marginal")) {
      inst.gen.v_marginal = marginal_from_json(j.at("v_marginal"));
    }
  } else {
    throw std::invalid_argument("unknown instance kind: " + inst.kind);
  }
  return inst;
}

InstanceFile load_instance(const std::string& path) {
  return instance_from_json(read_file(path));
}

void save_json(const ordered_json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

ResolvedInstance resolve(const InstanceFile& inst) {
  ResolvedInstance r;
  if (inst.kind == "discrete") {
    r.discrete = DiscreteTypeDistribution(inst.types);
    return r;
  }
  const GeneratorSpec& g = inst.gen;
  auto param = [&](const std::string& key) {
    auto it = g.params.find(key);
    if (it == g.params.end()) {
      throw std::invalid_argument("generator " + g.name +
                                  " missing parameter " + key);
    }
    return it->second;
  };
  auto param_or = [&](const std::string& key, double fallback) {
    auto it = g.params.find(key);
    return it == g.params.end() ? fallback : it->second;
  };
  if (g.name == "kstep-tight") {
    r.discrete = gen_kstep_tight(static_cast<int>(param("k")), param("r"),
                                 param("eps"));
  } else if (g.name == "loss-tight") {
    r.discrete = gen_loss_tight(static_cast<int>(param("k")),
                                param_or("d", 1e4), param_or("eps", 1e-6));
  } else if (g.name == "band") {
    r.continuous = gen_band().distribution;
  } else if (g.name == "product") {
    r.discrete = gen_product(g.theta_marginal, g.v_marginal);
  } else {
    throw std::invalid_argument("unknown generator: " + g.name);
  }
  return r;
}

ordered_json report_to_json(const ReportFile& r) {
  ordered_json j;
  j["schema"] = 1;
  j["revenue"] = fmt(r.revenue);
  j["time_loss"] = fmt(r.time_loss);
  ordered_json line = ordered_json::array();
  for (const Segment& s : r.line) {
    line.push_back({{"slope", fmt(s.slope)}, {"intercept", fmt(s.intercept)}});
  }
  j["line"] = line;
  ordered_json pricing = ordered_json::array();
  for (const PriceStep& s : r.pricing) {
    pricing.push_back({{"time", fmt(s.time)}, {"price", fmt(s.price)}});
  }
  j["pricing"] = pricing;
  ordered_json decisions = ordered_json::array();
  for (std::size_t i = 0; i < r.decisions.size(); ++i) {
    const BuyerType& t = r.types[i];
    const Decision& d = r.decisions[i];
    decisions.push_back({{"theta", fmt(t.theta)},
                         {"v", fmt(t.v)},
                         {"prob", fmt(t.prob)},
                         {"buys", d.buys},
                         {"time", fmt(d.time)},
                         {"payment", fmt(d.payment)}});
  }
  j["decisions"] = decisions;
  if (r.certification) {
    j["certification"] = {{"epsilon", fmt(r.certification->epsilon)},
                          {"eta", fmt(r.certification->eta)},
                          {"error_bound", fmt(r.certification->error_bound)}};
  }
  return j;
}

ReportFile report_from_json(const ordered_json& j) {
  check_schema(j);
  ReportFile r;
  r.revenue = parse_number(j.at("revenue"));
  r.time_loss = parse_number(j.at("time_loss"));
  for (const auto& e : j.at("line")) {
    r.line.push_back(
        Segment{parse_number(e.at("slope")), parse_number(e.at("intercept"))});
  }
  for (const auto& e : j.at("pricing")) {
    r.pricing.push_back(
        PriceStep{parse_number(e.at("time")), parse_number(e.at("price"))});
  }
  if (j.contains("decisions")) {
    for (const auto& e : j.at("decisions")) {
      r.types.push_back(BuyerType{parse_number(e.at("theta")),
                                  parse_number(e.at("v")),
                                  parse_number(e.at("prob"))});
      r.decisions.push_back(Decision{e.at("buys").get<bool>(),
                                     parse_number(e.at("time")),
                                     parse_number(e.at("payment"))});
    }
  }
  if (j.contains("certification")) {
    const auto& c = j.at("certification");
    r.certification = Certification{parse_number(c.at("epsilon")),
                                    parse_number(c.at("eta")),
                                    parse_number(c.at("error_bound"))};
  }
  return r;
}

ReportFile load_report(const std::string& path) {
  return report_from_json(read_file(path));
}

}  // namespace timeprice::io
