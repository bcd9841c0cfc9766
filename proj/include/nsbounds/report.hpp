#ifndef NSBOUNDS_REPORT_HPP
#define NSBOUNDS_REPORT_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nsb {

/// One named result row: task, ordered parameters, ordered values, and the
/// tag of the formula that produced it. Field order is fixed at insertion
/// so serialization is deterministic.
struct BoundReport {
  using Param = std::variant<long long, double, std::string>;

  std::string task;
  std::vector<std::pair<std::string, Param>> params;
  std::vector<std::pair<std::string, double>> values;
  std::string provenance;

  BoundReport& with_param(std::string key, long long v);
  BoundReport& with_param(std::string key, int v) { return with_param(std::move(key), static_cast<long long>(v)); }
  BoundReport& with_param(std::string key, double v);
  BoundReport& with_param(std::string key, std::string v);
  BoundReport& with_value(std::string key, double v);
};

/// 17 significant digits; round-trips any double.
std::string format_double(double v);

std::string to_json(const BoundReport& report);
std::string to_json(const std::vector<BoundReport>& reports);

/// Header plus one row per report; all reports must share a schema.
std::string to_csv(const std::vector<BoundReport>& reports);

}  // namespace nsb

#endif
