// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermice/evolution/brackets.hpp"
#include "fermice/fock/io.hpp"
#include "fermice/ice/bend.hpp"
#include "fermice/ice/io.hpp"
#include "fermice/render/svg.hpp"
#include "fermice/ring/io.hpp"
#include "fermice/verify/suites.hpp"

namespace fermice::cli {

namespace {

using ring::MultiPoly;

constexpr int kOk = 0;
constexpr int kIdentityFailure = 1;
constexpr int kUsage = 2;

/// Input the user got wrong; reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Caps {
  int n_max = 6;
  int lambda1_max = 12;
  int cases = 1000000;
  int k_max = 8;
};

// FERMICE_CAPS="n_max=3,lambda1_max=5,cases=200,k_max=2"; each entry can only
// lower the built-in cap.
Caps read_caps() {
  Caps caps;
  const char* env = std::getenv("FERMICE_CAPS");
  if (env == nullptr) return caps;
  std::istringstream in(env);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("FERMICE_CAPS: expected key=value, got " + item);
    const std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("FERMICE_CAPS: bad value in " + item);
    }
    int* slot = key == "n_max"         ? &caps.n_max
                : key == "lambda1_max" ? &caps.lambda1_max
                : key == "cases"       ? &caps.cases
                : key == "k_max"       ? &caps.k_max
                                       : nullptr;
    if (slot == nullptr) throw UsageError("FERMICE_CAPS: unknown key " + key);
    *slot = std::min(*slot, value);
  }
  return caps;
}

std::vector<int> parts_or_throw(const std::string& text, const char* what) {
  try {
    return parse_parts(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

StrictPartition strict_or_throw(const std::string& text, const char* what) {
  auto parts = parts_or_throw(text, what);
  if (!is_strict(parts)) {
    throw UsageError(std::string(what) + " = " + text +
                     " is not strict; brackets and lattice models need strictly decreasing positive parts");
  }
  return parts;
}

MultiPoly specialize(const MultiPoly& p, const std::string& assignments) {
  if (assignments.empty()) return p;
  std::map<ring::VarId, MultiPoly> values;
  try {
    values = ring::parse_assignments(assignments);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--set: ") + e.what());
  }
  try {
    return p.substitute(values);
  } catch (const std::domain_error& e) {
    throw UsageError(std::string("--set: ") + e.what());
  }
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------- bracket

struct BracketArgs {
  bool plus = false;
  bool minus = false;
  std::string lambda;
  std::string mu;
  std::optional<int> k;
  std::string set;
};

int cmd_bracket(const BracketArgs& a, std::ostream& out) {
  if (a.plus == a.minus) throw UsageError("bracket: choose exactly one of --plus and --minus");
  const StrictPartition lambda = strict_or_throw(a.lambda, "--lambda");
  const StrictPartition mu = strict_or_throw(a.mu, "--mu");
  if (lambda.empty() || mu.size() + 1 != lambda.size()) {
    throw UsageError("bracket: the one-step bracket needs strict lambda with n >= 1 parts and strict mu "
                     "with n - 1 parts; got " +
                     std::to_string(lambda.size()) + " and " + std::to_string(mu.size()));
  }
  const ring::Monomial x = ring::Monomial::var(ring::VarId::x(1));
  const MultiPoly t = ring::T(1);
  MultiPoly oracle;
  MultiPoly closed;
  if (a.plus) {
    if (a.k) throw UsageError("bracket: --k applies to --minus only");
    oracle = evolution::one_step_oracle_plus(mu, lambda, x, t);
    closed = evolution::one_step_closed_plus(mu, lambda, x, t);
  } else {
    const int k = a.k.value_or(lambda[0] + 1);
    if (k <= lambda[0]) {
      throw UsageError("bracket: --k must exceed lambda_1 = " + std::to_string(lambda[0]));
    }
    oracle = evolution::one_step_oracle_minus(mu, lambda, k, x, t);
    closed = evolution::one_step_closed_minus(mu, lambda, k, x, t);
  }
  oracle = specialize(oracle, a.set);
  closed = specialize(closed, a.set);
  const bool equal = oracle == closed;
  out << "oracle: " << oracle.to_string() << "\n";
  out << "closed: " << closed.to_string() << "\n";
  out << (equal ? "EQUAL" : "DIFFER") << "\n";
  return equal ? kOk : kIdentityFailure;
}

// --------------------------------------------------------------------- pf

struct PfArgs {
  std::string lambda;
  std::string scheme = "delta";
  std::string method = "enumerate";
  bool all = false;
  std::string set;
};

int cmd_pf(const PfArgs& a, const Caps& caps, std::ostream& out) {
  const StrictPartition lambda = strict_or_throw(a.lambda, "--lambda");
  if (lambda.empty()) throw UsageError("pf: --lambda needs at least one part");
  if (static_cast<int>(lambda.size()) > caps.n_max || lambda[0] > caps.lambda1_max) {
    throw UsageError("pf: lambda exceeds the size caps");
  }
  ice::WeightScheme scheme;
  try {
    scheme = ice::WeightScheme::by_name(a.scheme);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("pf: ") + e.what());
  }
  auto compute = [&](const std::string& method) -> MultiPoly {
    if (method == "enumerate") return ice::partition_function(lambda, scheme);
    if (a.scheme == "ones") throw UsageError("pf: scheme ones supports --method enumerate only");
    if (method == "chain") {
      return a.scheme == "delta" ? verify::z_delta_chain(lambda) : verify::z_gamma_chain(lambda);
    }
    if (method == "determinant") {
      return a.scheme == "delta" ? verify::z_delta_determinant(lambda) : verify::z_gamma_determinant(lambda);
    }
    throw UsageError("pf: unknown method " + method);
  };
  if (!a.all) {
    out << specialize(compute(a.method), a.set).to_string() << "\n";
    return kOk;
  }
  std::vector<std::string> methods = {"enumerate"};
  if (a.scheme != "ones") methods = {"enumerate", "chain", "determinant"};
  std::vector<MultiPoly> values;
  for (const auto& m : methods) {
    values.push_back(specialize(compute(m), a.set));
    out << m << ": " << values.back().to_string() << "\n";
  }
  const bool agree = std::all_of(values.begin(), values.end(), [&](const MultiPoly& v) { return v == values[0]; });
  out << (agree ? "AGREE" : "DISAGREE") << "\n";
  return agree ? kOk : kIdentityFailure;
}

// -------------------------------------------------------------- enumerate

struct EnumerateArgs {
  std::string lambda;
  std::string model = "ice";
};

int cmd_enumerate(const EnumerateArgs& a, const Caps& caps, std::ostream& out) {
  const StrictPartition lambda = strict_or_throw(a.lambda, "--lambda");
  if (lambda.empty()) throw UsageError("enumerate: --lambda needs at least one part");
  if (static_cast<int>(lambda.size()) > caps.n_max || lambda[0] > caps.lambda1_max) {
    throw UsageError("enumerate: lambda exceeds the size caps");
  }
  nlohmann::json states = nlohmann::json::array();
  if (a.model == "ice") {
    for (const auto& s : ice::enumerate_states(lambda)) states.push_back(ice::state_to_json(s));
  } else if (a.model == "bend") {
    for (const auto& s : ice::enumerate_nn_states(lambda)) states.push_back(ice::bend_state_to_json(s));
  } else {
    throw UsageError("enumerate: --model must be ice or bend");
  }
  out << nlohmann::json{{"lambda", lambda}, {"model", a.model}, {"count", states.size()}, {"states", states}}.dump(2)
      << "\n";
  return kOk;
}

// ----------------------------------------------------------------- render

struct RenderArgs {
  std::string target;
  std::string input;
  std::string lambda;
  int index = 0;
  bool example = false;
  int charge = 0;
  std::string partition;
  std::string output;
};

std::string render_target(const RenderArgs& a) {
  auto pick = [&](std::size_t count) {
    if (a.index < 0 || static_cast<std::size_t>(a.index) >= count) {
      throw UsageError("render: --index out of range (" + std::to_string(count) + " states)");
    }
    return static_cast<std::size_t>(a.index);
  };
  try {
    if (a.target == "ice") {
      if (!a.input.empty()) return render::ice_svg(ice::state_from_json(read_json(a.input)));
      if (a.example) return render::ice_svg(ice::pattern_to_ice(GTPattern{{{5, 3, 2}, {4, 3}, {3}}}));
      const auto states = ice::enumerate_states(strict_or_throw(a.lambda, "--lambda"));
      return render::ice_svg(states[pick(states.size())]);
    }
    if (a.target == "bend") {
      if (!a.input.empty()) return render::bend_svg(ice::bend_state_from_json(read_json(a.input)));
      if (a.example) return render::bend_svg(ice::example_bend_state());
      const auto states = ice::enumerate_nn_states(strict_or_throw(a.lambda, "--lambda"));
      return render::bend_svg(states[pick(states.size())]);
    }
    if (a.target == "pattern") {
      if (!a.input.empty()) return render::pattern_svg(ice::pattern_from_json(read_json(a.input)));
      if (a.example) return render::pattern_svg(GTPattern{{{5, 3, 2}, {4, 3}, {3}}});
      const auto patterns = strict_gt_patterns(strict_or_throw(a.lambda, "--lambda"));
      return render::pattern_svg(patterns[pick(patterns.size())]);
    }
    if (a.target == "maya") {
      if (!a.input.empty()) return render::maya_svg(fock::state_from_json(read_json(a.input)));
      if (!a.lambda.empty()) return render::maya_svg(fock::state_from_strict(strict_or_throw(a.lambda, "--lambda")));
      const auto parts = parts_or_throw(a.partition, "--partition");
      if (!is_partition(parts)) throw UsageError("render: --partition must be weakly decreasing");
      return render::maya_svg(fock::state_from_partition(parts, a.charge));
    }
  } catch (const std::logic_error& e) {
    throw UsageError(std::string("render: invalid input: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("render: invalid input: ") + e.what());
  }
  throw UsageError("render: target must be ice, bend, pattern, or maya");
}

int cmd_render(const RenderArgs& a, std::ostream& out) {
  const std::string svg = render_target(a);
  if (a.output.empty()) {
    out << svg;
  } else {
    std::ofstream f(a.output);
    if (!f) throw UsageError("cannot write " + a.output);
    f << svg;
  }
  return kOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::vector<std::string> suites;
  int n_max = 3;
  int lambda1_max = 5;
  bool quick = false;
  std::vector<int> n;
  std::uint64_t seed = 20260101;
  int cases = 1000;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, const Caps& caps, std::ostream& out) {
  std::vector<std::string> names;
  for (const auto& s : a.suites.empty() ? std::vector<std::string>{"all"} : a.suites) {
    if (s == "all") {
      names.insert(names.end(), verify::suite_names().begin(), verify::suite_names().end());
    } else if (std::find(verify::suite_names().begin(), verify::suite_names().end(), s) !=
               verify::suite_names().end()) {
      names.push_back(s);
    } else {
      throw UsageError("verify: unknown suite " + s);
    }
  }
  for (int n : a.n) {
    if (n < 2 || n > 5) throw UsageError("verify: --n must satisfy 2 <= n <= 5");
  }
  verify::SuiteOptions opts;
  opts.n_max = std::min(a.n_max, caps.n_max);
  opts.lambda1_max = std::min(a.lambda1_max, caps.lambda1_max);
  opts.quick = a.quick;
  opts.phat_ns = a.n;
  opts.cases = std::min(a.cases, caps.cases);
  opts.seed = a.seed;
  bool all_pass = true;
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& name : names) {
    const auto report = verify::run_suite(name, opts);
    all_pass = all_pass && report.passed();
    if (a.json) {
      reports.push_back(report.to_json());
      continue;
    }
    out << report.summary() << "\n";
    for (const auto& note : report.notes) out << "  note: " << note << "\n";
    for (const auto& f : report.failures) {
      out << "  failure: " << f.input << "\n    expected: " << f.expected << "\n    actual:   " << f.actual << "\n";
    }
  }
  if (a.json) out << reports.dump(2) << "\n";
  return all_pass ? kOk : kIdentityFailure;
}

// ------------------------------------------------------------------ bench

struct BenchArgs {
  int n = 3;
  int k_max = 3;
  int reps = 1;
};

int cmd_bench(const BenchArgs& a, const Caps& caps, std::ostream& out, std::ostream& err) {
  if (a.n < 1 || a.n > caps.n_max) throw UsageError("bench: --n outside the size caps");
  if (a.k_max < 0 || a.k_max > caps.k_max) throw UsageError("bench: --k-max outside the size caps");
  if (a.reps < 1) throw UsageError("bench: --reps must be positive");
  const auto result = verify::bench_family(a.n, a.k_max, a.reps);
  if (!result.agree) {
    for (const auto& d : result.disagreements) err << "disagreement: " << d << "\n";
    return kIdentityFailure;
  }
  out << "lambda,method,seconds,terms,states\n";
  for (const auto& row : result.rows) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.6f", row.seconds);
    out << '"' << format_parts(row.lambda) << "\"," << row.method << ',' << secs << ',' << row.terms << ','
        << row.states << "\n";
  }
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact free-fermion and six-vertex identity checks", "fermice"};
  app.require_subcommand(1);

  BracketArgs bracket;
  auto* sb = app.add_subcommand("bracket", "One-step bracket: Fock-space oracle against the closed form");
  sb->add_flag("--plus", bracket.plus, "<mu| e^{phi+} psi_{-1/2} |lambda>");
  sb->add_flag("--minus", bracket.minus, "<mu| psi_{k-1/2} e^{phi-} |lambda>");
  sb->add_option("--lambda", bracket.lambda, "strict partition, e.g. 5,3,2")->required();
  sb->add_option("--mu", bracket.mu, "strict partition with one part fewer")->required();
  sb->add_option("--k", bracket.k, "annihilated mode for --minus (default lambda_1 + 1)");
  sb->add_option("--set", bracket.set, "specializations applied to the result, e.g. t1=0");

  PfArgs pf;
  auto* sp = app.add_subcommand("pf", "Partition function of the rectangular model");
  sp->add_option("--lambda", pf.lambda, "strict partition")->required();
  sp->add_option("--scheme", pf.scheme, "delta | gamma | ones");
  sp->add_option("--method", pf.method, "enumerate | chain | determinant");
  sp->add_flag("--all", pf.all, "compute every method and compare");
  sp->add_option("--set", pf.set, "specializations applied to the result");

  EnumerateArgs en;
  auto* se = app.add_subcommand("enumerate", "List admissible states as JSON");
  se->add_option("--lambda", en.lambda, "strict partition")->required();
  se->add_option("--model", en.model, "ice | bend");

  RenderArgs rd;
  auto* sr = app.add_subcommand("render", "Write an SVG picture");
  sr->add_option("target", rd.target, "ice | bend | pattern | maya")->required();
  sr->add_option("--input", rd.input, "JSON file with a state or pattern");
  sr->add_option("--lambda", rd.lambda, "strict partition");
  sr->add_option("--index", rd.index, "which enumerated state or pattern");
  sr->add_flag("--example", rd.example, "the three-row example state, or the displayed bend state");
  sr->add_option("--partition", rd.partition, "maya: partition placed at --charge");
  sr->add_option("--charge", rd.charge, "maya: charge (default 0)");
  sr->add_option("-o,--output", rd.output, "file to write instead of stdout");

  VerifyArgs vf;
  auto* sv = app.add_subcommand("verify", "Run identity suites");
  sv->add_option("--suite", vf.suites, "suite name or all (repeatable)");
  sv->add_option("--n-max", vf.n_max, "largest number of parts");
  sv->add_option("--lambda1-max", vf.lambda1_max, "largest first part");
  sv->add_flag("--quick", vf.quick, "smaller ranges");
  sv->add_option("--n", vf.n, "phat sizes (repeatable)");
  sv->add_option("--seed", vf.seed, "seed for randomized suites");
  sv->add_option("--cases", vf.cases, "cases per randomized suite");
  sv->add_flag("--json", vf.json, "print reports as JSON");

  BenchArgs bn;
  auto* sbn = app.add_subcommand("bench", "Time enumeration against chain and determinant evaluation");
  sbn->add_option("--n", bn.n, "number of parts");
  sbn->add_option("--k-max", bn.k_max, "largest k in lambda = rho + (k, 0, ...)");
  sbn->add_option("--reps", bn.reps, "repetitions per timing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Caps caps = read_caps();
    if (sb->parsed()) return cmd_bracket(bracket, out);
    if (sp->parsed()) return cmd_pf(pf, caps, out);
    if (se->parsed()) return cmd_enumerate(en, caps, out);
    if (sr->parsed()) return cmd_render(rd, out);
    if (sv->parsed()) return cmd_verify(vf, caps, out);
    if (sbn->parsed()) return cmd_bench(bn, caps, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace fermice::cli
