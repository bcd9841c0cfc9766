#include "nsbounds/report.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace nsb {

BoundReport& BoundReport::with_param(std::string key, long long v) {
  params.emplace_back(std::move(key), Param(v));
  return *this;
}

BoundReport& BoundReport::with_param(std::string key, double v) {
  params.emplace_back(std::move(key), Param(v));
  return *this;
}

BoundReport& BoundReport::with_param(std::string key, std::string v) {
  params.emplace_back(std::move(key), Param(std::move(v)));
  return *this;
}

BoundReport& BoundReport::with_value(std::string key, double v) {
  values.emplace_back(std::move(key), v);
  return *this;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

nlohmann::ordered_json report_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["task"] = report.task;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.params) {
    std::visit([&](const auto& v) { params[key] = v; }, value);
  }
  j["params"] = std::move(params);
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.values) values[key] = value;
  j["values"] = std::move(values);
  j["provenance"] = report.provenance;
  return j;
}

std::string param_to_string(const BoundReport::Param& p) {
  if (const auto* i = std::get_if<long long>(&p)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&p)) return format_double(*d);
  return std::get<std::string>(p);
}

}  // namespace

std::string to_json(const BoundReport& report) { return report_json(report).dump(2) + "\n"; }

std::string to_json(const std::vector<BoundReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2) + "\n";
}

std::string to_csv(const std::vector<BoundReport>& reports) {
  if (reports.empty()) return "";
  const BoundReport& head = reports.front();
  std::string out = "task";
  for (const auto& [key, _] : head.params) out += "," + key;
  for (const auto& [key, _] : head.values) out += "," + key;
  out += ",provenance\n";
  for (const auto& r : reports) {
    if (r.params.size() != head.params.size() || r.values.size() != head.values.size()) {
      throw std::invalid_argument("to_csv: reports do not share a schema");
    }
    out += r.task;
    for (const auto& [_, value] : r.params) out += "," + param_to_string(value);
    for (const auto& [_, value] : r.values) out += "," + format_double(value);
    out += "," + r.provenance + "\n";
  }
  return out;
}

}  // namespace nsb
