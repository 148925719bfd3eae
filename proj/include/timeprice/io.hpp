#ifndef TIMEPRICE_IO_HPP
#define TIMEPRICE_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "timeprice/types.hpp"

namespace timeprice::io {

using ordered_json = nlohmann::ordered_json;

// Fixed 12-significant-digit decimal formatting; all numbers are serialized
// as strings so regression files are byte-stable.
std::string fmt(double x);
double parse_number(const ordered_json& j);

struct GeneratorSpec {
  std::string name;  // kstep-tight | loss-tight | band | product
  std::map<std::string, double> params;
  std::vector<std::pair<double, double>> theta_marginal;
  std::vector<std::pair<double, double>> v_marginal;
};

struct InstanceFile {
  std::string kind;  // "discrete" | "generator"
  std::vector<BuyerType> types;
  GeneratorSpec gen;
};

ordered_json instance_to_json(const InstanceFile& inst);
InstanceFile instance_from_json(const ordered_json& j);
InstanceFile load_instance(const std::string& path);
void save_json(const ordered_json& j, const std::string& path);

struct ResolvedInstance {
  std::optional<DiscreteTypeDistribution> discrete;
  std::optional<ContinuousDistribution> continuous;
};

// Expands generator instances; band resolves to a continuous distribution,
// everything else to a discrete one. Throws std::invalid_argument on unknown
// generators or bad parameters.
ResolvedInstance resolve(const InstanceFile& inst);

struct Certification {
  double epsilon = 0.0;
  double eta = 0.0;
  double error_bound = 0.0;
};

struct ReportFile {
  double revenue = 0.0;
  double time_loss = 0.0;
  std::vector<Segment> line;
  std::vector<PriceStep> pricing;
  std::vector<BuyerType> types;  // echoed instance atoms, parallel decisions
  std::vector<Decision> decisions;
  std::optional<Certification> certification;
};

ordered_json report_to_json(const ReportFile& r);
ReportFile report_from_json(const ordered_json& j);
ReportFile load_report(const std::string& path);

}  // namespace timeprice::io

#endif  // TIMEPRICE_IO_HPP
