// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include <chrono>
#include <cstdio>

#include "fermice/verify/suites.hpp"

namespace fermice::verify {

void SuiteReport::check(bool ok, const std::string& input, const std::string& expected,
                        const std::string& actual) {
  ++cases;
  if (!ok) failures.push_back({input, expected, actual});
}

void SuiteReport::check_equal(const ring::MultiPoly& expected, const ring::MultiPoly& actual,
                              const std::string& input) {
  ++cases;
  if (expected != actual) failures.push_back({input, expected.to_string(), actual.to_string()});
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures) {
    fails.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return {{"suite", name},      {"cases", cases},        {"failures", fails},
          {"passed", passed()}, {"seconds", seconds},    {"notes", notes}};
}

std::string SuiteReport::summary() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", seconds);
  std::string s = name + ": " + (passed() ? "PASS" : "FAIL") + " (" + std::to_string(cases) +
                  " cases, " + std::to_string(failures.size()) + " failures, " + buf + ")";
  return s;
}

SuiteReport timed_suite(const std::string& name, const std::function<void(SuiteReport&)>& body) {
  SuiteReport r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace fermice::verify
