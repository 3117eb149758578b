#pragma once

// Check records and the machine-readable report written by the command-line tool.

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include <gmp.h>
#include <json.hpp>

namespace skw {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

/// Where an expected value comes from.
enum class Provenance {
  published,  // stated in the published source
  derived,    // obtained by an independent computation
  trivial,    // immediate from definitions
  none,       // no expectation; the record only reports
};

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::published: return "published";
    case Provenance::derived: return "derived";
    case Provenance::trivial: return "trivial";
    case Provenance::none: return "none";
  }
  return "?";
}

struct CheckRecord {
  std::string name;
  int criterion = 0;  // acceptance criterion 1..12, 0 when not tied to one
  Json inputs = Json::object();
  Json expected;
  Provenance provenance = Provenance::none;
  Json computed;
  bool pass = true;
  bool info = false;  // informational records never affect the verdict
  std::string note;
  double seconds = 0;
};

class Report {
 public:
  explicit Report(std::string command = {}) : command_(std::move(command)), start_(Clock::now()) {}

  void set_config(Json config) { config_ = std::move(config); }
  void set_timing(bool on) { timing_ = on; }
  void set_data(Json data) { data_ = std::move(data); }
  Json& data() { return data_; }

  CheckRecord& add(CheckRecord r) {
    records_.push_back(std::move(r));
    return records_.back();
  }

  void append(const Report& other) {
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
  }

  const std::vector<CheckRecord>& records() const { return records_; }

  bool pass() const {
    for (const auto& r : records_) {
      if (!r.info && !r.pass) return false;
    }
    return true;
  }

  /// Verdict for one acceptance criterion; false when it has no records.
  bool criterion_pass(int c) const {
    bool any = false;
    for (const auto& r : records_) {
      if (r.criterion != c || r.info) continue;
      any = true;
      if (!r.pass) return false;
    }
    return any;
  }

  Json to_json() const {
    Json j;
    j["tool"] = "skw";
    j["version"] = kVersion;
    j["command"] = command_;
    j["environment"] = environment();
    j["config"] = config_;
    if (data_.is_object()) {
      for (const auto& [k, v] : data_.items()) j[k] = v;
    }
    Json checks = Json::array();
    std::size_t passed = 0, failed = 0, info = 0;
    for (const auto& r : records_) {
      Json c;
      c["name"] = r.name;
      if (r.criterion) c["criterion"] = r.criterion;
      c["kind"] = r.info ? "info" : "check";
      c["inputs"] = r.inputs;
      c["expected"] = r.expected;
      c["provenance"] = to_string(r.provenance);
      c["computed"] = r.computed;
      c["pass"] = r.pass;
      if (!r.note.empty()) c["note"] = r.note;
      if (timing_) c["seconds"] = r.seconds;
      checks.push_back(std::move(c));
      if (r.info) {
        ++info;
      } else if (r.pass) {
        ++passed;
      } else {
        ++failed;
      }
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"passed", passed}, {"failed", failed}, {"info", info}, {"pass", pass()}};
    if (timing_) j["total_seconds"] = elapsed();
    return j;
  }

  std::string to_csv() const {
    std::ostringstream out;
    out << "name,criterion,kind,provenance,expected,computed,pass";
    if (timing_) out << ",seconds";
    out << '\n';
    for (const auto& r : records_) {
      out << csv_field(r.name) << ',' << r.criterion << ',' << (r.info ? "info" : "check") << ',' << to_string(r.provenance)
          << ',' << csv_field(r.expected.dump()) << ',' << csv_field(r.computed.dump()) << ',' << (r.pass ? "true" : "false");
      if (timing_) out << ',' << r.seconds;
      out << '\n';
    }
    return out.str();
  }

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  using Clock = std::chrono::steady_clock;

  static Json environment() {
    Json e;
#if defined(__clang__)
    e["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
    e["compiler"] = std::string("gcc ") + __VERSION__;
#else
    e["compiler"] = "unknown";
#endif
    e["cxx_standard"] = static_cast<long>(__cplusplus);
    e["gmp"] = gmp_version;
    return e;
  }

  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  }

  std::string command_;
  Json config_ = Json::object();
  Json data_;
  std::vector<CheckRecord> records_;
  bool timing_ = false;
  Clock::time_point start_;
};

/// Runs body on a fresh record and stamps its duration.
template <class Body>
CheckRecord timed_check(std::string name, int criterion, Body&& body) {
  CheckRecord r;
  r.name = std::move(name);
  r.criterion = criterion;
  auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace skw
