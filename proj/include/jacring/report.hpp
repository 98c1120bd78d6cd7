#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "jacring/errors.hpp"

namespace jacring {

using Json = nlohmann::ordered_json;

// Machine-readable run report.  Fixed key order; every varying quantity that
// is not part of the verified result (wall time) lives under "timings" so two
// runs of the same command and seed agree byte-for-byte outside that key.
class ReportBuilder {
 public:
  explicit ReportBuilder(const std::string& command) : start_(clock_now()) {
    doc_["schema_version"] = 1;
    doc_["command"] = command;
    doc_["inputs"] = Json::object();
    doc_["checks"] = Json::array();
    doc_["summary"] = Json::object();
    doc_["errors"] = Json::array();
  }

  Json& inputs() { return doc_["inputs"]; }
  Json& summary() { return doc_["summary"]; }

  void add_check(const std::string& name, bool ok, Json details = Json::object()) {
    Json entry;
    entry["name"] = name;
    entry["ok"] = ok;
    if (!details.empty()) entry["details"] = std::move(details);
    doc_["checks"].push_back(std::move(entry));
    ++total_;
    if (!ok) ++failed_;
  }

  void add_error(const std::string& message) { doc_["errors"].push_back(message); }

  int failed() const { return failed_; }
  int total() const { return total_; }

  Json finish() {
    doc_["summary"]["checks_total"] = total_;
    doc_["summary"]["checks_failed"] = failed_;
    doc_["summary"]["ok"] = (failed_ == 0 && doc_["errors"].empty());
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        clock_now() - start_);
    doc_["timings"] = Json::object();
    doc_["timings"]["total_ms"] = elapsed.count();
    return doc_;
  }

 private:
  static std::chrono::steady_clock::time_point clock_now() {
    return std::chrono::steady_clock::now();
  }
  Json doc_;
  int total_ = 0;
  int failed_ = 0;
  std::chrono::steady_clock::time_point start_;
};

inline void write_report(const Json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ResourceError("cannot open output file: " + out_path);
  out << text;
}

}  // namespace jacring
