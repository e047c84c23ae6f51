#pragma once

// Certificates: one suite per task, each a list of named checks.  A failing
// check always carries a witness.  Apart from the "timing_ms" fields the JSON
// is a function of the parameters alone.

#include <chrono>
#include <string>
#include <vector>

#include "klein11/exact/serialize.hpp"

namespace klein11 {

inline constexpr const char* kCertificateSchema = "klein11-certificate/1";
inline constexpr const char* kArtifactVersion = "1.0.0";

inline json exact_value(const Cyclotomic& c) {
  json j;
  j["value"] = pretty(c);
  j["exact"] = to_json_value(c);
  return j;
}

inline json exact_value(const Rational& q) { return to_json_value(q); }

struct Check {
  std::string name;
  bool pass = false;
  std::string summary;  // one line for the text report
  json witness;         // required on failure
};

struct Suite {
  std::string task;
  json parameters = json::object();
  std::vector<Check> checks;
  json results = json::object();
  std::vector<std::string> text;  // extra report lines
  double timing_ms = 0;

  bool pass() const {
    if (checks.empty()) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void check(std::string name, bool ok, std::string summary = {}, json witness = nullptr) {
    if (!ok && witness.is_null()) witness = summary.empty() ? json("check failed") : json(summary);
    checks.push_back({std::move(name), ok, std::move(summary), std::move(witness)});
  }

  json to_json() const {
    json j;
    j["task"] = task;
    j["status"] = pass() ? "pass" : "fail";
    j["parameters"] = parameters;
    json cs = json::array();
    for (const auto& c : checks) {
      json e;
      e["name"] = c.name;
      e["pass"] = c.pass;
      if (!c.summary.empty()) e["summary"] = c.summary;
      if (!c.witness.is_null()) e["witness"] = c.witness;
      cs.push_back(e);
    }
    j["checks"] = cs;
    j["results"] = results;
    j["timing_ms"] = timing_ms;
    return j;
  }

  std::string report() const {
    std::string s = "[" + task + "] " + (pass() ? "PASS" : "FAIL") + "\n";
    for (const auto& c : checks) {
      s += std::string("  ") + (c.pass ? "ok   " : "FAIL ") + c.name;
      if (!c.summary.empty()) s += ": " + c.summary;
      s += "\n";
      if (!c.pass && !c.witness.is_null()) s += "       witness: " + c.witness.dump() + "\n";
    }
    for (const auto& t : text) s += "  " + t + "\n";
    return s;
  }
};

struct Certificate {
  json parameters = json::object();
  std::vector<Suite> suites;

  bool pass() const {
    if (suites.empty()) return false;
    for (const auto& s : suites)
      if (!s.pass()) return false;
    return true;
  }

  json to_json() const {
    json j;
    j["schema"] = kCertificateSchema;
    j["artifact_version"] = kArtifactVersion;
    j["parameters"] = parameters;
    j["status"] = pass() ? "pass" : "fail";
    json ss = json::array();
    for (const auto& s : suites) ss.push_back(s.to_json());
    j["suites"] = ss;
    return j;
  }
};

// The certificate with every timing field removed, for comparisons.
inline json without_timing(json j) {
  if (j.is_object()) {
    j.erase("timing_ms");
    for (auto& [k, v] : j.items()) v = without_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = without_timing(v);
  }
  return j;
}

// Runs body(suite), turning library errors into a failing check with the
// message (and exponent, when known) as witness.
template <class F>
Suite run_suite(const std::string& task, json parameters, F&& body) {
  Suite s;
  s.task = task;
  s.parameters = std::move(parameters);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(s);
  } catch (const VerificationFailure& e) {
    s.check("completed", false, e.what(), json{{"error", e.what()}, {"exponent", e.exponent()}});
  } catch (const TruncationError& e) {
    s.check("completed", false, e.what(), json{{"error", e.what()}, {"achievable", e.achievable()}});
  } catch (const MathError& e) {
    s.check("completed", false, e.what(), json{{"error", e.what()}});
  }
  s.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

}  // namespace klein11
