// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <stdexcept>

#include "fermice/verify/suites.hpp"

namespace fermice::verify {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "theorem1",    "theorem2",    "ice",         "calibration",     "bend",
      "phat",        "commutation", "wick",        "jacobi_trudi",    "tokuyama",
      "cauchy",      "anticommutation", "current_algebra", "modewise", "ring_axioms"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  const bool q = opts.quick;
  const int n_max = q ? std::min(opts.n_max, 3) : opts.n_max;
  const int l1 = q ? std::min(opts.lambda1_max, 5) : opts.lambda1_max;
  const int cases = q ? std::min(opts.cases, 200) : opts.cases;
  if (name == "theorem1") return one_step_suite(n_max, l1);
  if (name == "theorem2") {
    std::vector<StrictPartition> spots;
    if (!q) spots = {{4, 3, 2, 1}, {5, 3, 2, 1}, {5, 4, 2, 1}, {6, 3, 2, 1}};
    return chain_suite(n_max, q ? std::min(l1, 4) : l1, q ? 2 : 3, spots);
  }
  if (name == "ice") return ice_suite(n_max, q ? std::min(l1, 4) : l1);
  if (name == "calibration") return calibration_suite(2, 4);
  if (name == "bend") {
    if (q) return bend_suite({{1}, {2, 1}, {3, 1}});
    return bend_suite({{1}, {2, 1}, {3, 1}, {3, 2, 1}});
  }
  if (name == "phat") {
    std::vector<int> ns = opts.phat_ns;
    if (ns.empty()) ns = q ? std::vector<int>{2, 3} : std::vector<int>{2, 3, 4};
    return phat_suite(ns);
  }
  if (name == "commutation") return commutation_suite(4, q ? 2 : 3);
  if (name == "wick") return wick_suite();
  if (name == "jacobi_trudi") return q ? jacobi_trudi_suite(2, 3, 2) : jacobi_trudi_suite(3, 4, 3);
  if (name == "tokuyama") return tokuyama_super_suite(n_max, l1);
  if (name == "cauchy") return cauchy_suite({2, 3}, q ? 4 : 5);
  if (name == "anticommutation") return anticommutation_suite(cases, opts.seed);
  if (name == "current_algebra") return current_algebra_suite(cases, opts.seed);
  if (name == "modewise") return modewise_commutator_suite(cases, opts.seed);
  if (name == "ring_axioms") return ring_axioms_suite(cases, opts.seed);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace fermice::verify
