#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "legh/error.hpp"
#include "legh/experiments.hpp"

namespace legh {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

nlohmann::json record_json(const RunRecord& r) {
  return {{"t", to_string(r.t)},
          {"lambda", to_string(r.lambda)},
          {"h_lambda", r.h_lambda},
          {"nt_height", r.nt_height},
          {"total_height", r.total_height},
          {"st_ratio", r.st_ratio},
          {"nt_depth", r.nt_depth}};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path.string());
  out << text;
}

}  // namespace

std::string records_to_csv(const std::vector<RunRecord>& records) {
  std::ostringstream os;
  os << "t,lambda,h_lambda,nt_height,total_height,st_ratio\n";
  for (const auto& r : records) {
    os << to_string(r.t) << ',' << to_string(r.lambda) << ',' << fmt(r.h_lambda) << ',' << fmt(r.nt_height) << ','
       << fmt(r.total_height) << ',' << fmt(r.st_ratio) << '\n';
  }
  return os.str();
}

std::string run_to_json(const RunDocument& run) {
  nlohmann::json doc;
  doc["library"] = "legh";
  doc["version"] = LEGH_VERSION;
  doc["experiment"] = run.experiment;
  doc["family"] = nlohmann::json::parse(family_to_json(run.family));
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& t : run.samples) samples.push_back(to_string(t));
  doc["parameters"] = {{"samples", samples},
                       {"tolerance", run.options.nt.tolerance},
                       {"bit_budget", run.options.nt.bit_budget},
                       {"max_depth", run.options.nt.max_depth},
                       {"precision", "double"}};
  doc["records"] = nlohmann::json::array();
  for (const auto& r : run.data.records) doc["records"].push_back(record_json(r));
  doc["skipped"] = nlohmann::json::array();
  for (const auto& s : run.data.skipped) doc["skipped"].push_back({{"t", to_string(s.t)}, {"reason", s.reason}});
  doc["diagnostics"] = nlohmann::json::object();
  for (const auto& [k, v] : run.diagnostics) doc["diagnostics"][k] = std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
  for (const auto& [k, v] : run.labels) doc["diagnostics"][k] = v;
  return doc.dump(2);
}

void write_run(const std::filesystem::path& dir, const RunDocument& run) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::InvalidInput, "cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / (run.experiment + ".json"), run_to_json(run) + "\n");
  write_file(dir / (run.experiment + ".csv"), records_to_csv(run.data.records));
}

}  // namespace legh
