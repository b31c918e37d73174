// Copyright 2026 The qobdd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end: build | eval | verify | goodset | hsf | report.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qobdd/qobdd.hpp"

namespace qobdd::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

/// Input problem detected after argument parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error &e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
}

struct FunctionFlags {
  std::string function;
  std::size_t n = 0;
  std::uint64_t m = 0;
  std::string file;
};

inline void add_function_flags(CLI::App *cmd, FunctionFlags &f, bool with_files) {
  std::vector<std::string> names{"mod", "eq", "palindrome", "perm"};
  if (with_files) {
    names.push_back("sop-file");
    names.push_back("char-file");
  }
  cmd->add_option("--function", f.function, "Function to compile")->required()->check(CLI::IsMember(names));
  cmd->add_option("--n", f.n, "Size parameter (bits, string length, or matrix side)");
  cmd->add_option("--m", f.m, "Modulus for MOD_m");
  if (with_files) cmd->add_option("--file", f.file, "Input JSON for sop-file / char-file");
}

inline FunctionCase function_case(const FunctionFlags &f) {
  auto need_n = [&](std::size_t min) {
    if (f.n < min) throw UsageError("--function " + f.function + " needs --n >= " + std::to_string(min));
  };
  if (f.function == "mod") {
    need_n(1);
    if (f.m < 2) throw UsageError("--function mod needs --m >= 2");
    return mod_case(f.n, f.m);
  }
  if (f.function == "eq") {
    need_n(1);
    return eq_case(f.n);
  }
  if (f.function == "palindrome") {
    need_n(2);
    return palindrome_case(f.n);
  }
  if (f.function == "perm") {
    need_n(1);
    return perm_case(f.n);
  }
  throw UsageError("unsupported function " + f.function);
}

/// Auto policy, with realized residues when m is too large for exhaustive
/// verification and the inputs can still be enumerated.
inline GoodSetSelection build_good_set(const std::vector<LinearPolynomial> &polys, double epsilon,
                                       std::uint64_t seed) {
  const std::size_t n = polys.front().arity();
  if (polys.front().modulus().value() > kDefaultVerifyLimit && n > kExhaustiveLimit) {
    return select_good_set(epsilon, polys.front().modulus(), seed);
  }
  return choose_good_set(polys, n, epsilon, seed, GoodSetPolicy::kAuto);
}

inline int cmd_build(const FunctionFlags &f, double epsilon, std::uint64_t seed, const std::string &out_path,
                     std::ostream &out) {
  Json compiled;
  std::optional<GoodSetSelection> selection;
  if (f.function == "char-file" || f.function == "sop-file") {
    if (f.file.empty()) throw UsageError("--function " + f.function + " needs --file");
    const Json input = read_json_file(f.file);
    if (f.function == "sop-file") {
      const auto linear = as_linear(sop_to_polynomial(sop_from_json(input)));
      if (!linear) throw UsageError("the polynomial of this formula is not linear and cannot be compiled");
      selection = build_good_set({*linear}, epsilon, seed);
      compiled = to_json(compile_single(*linear, selection->set));
    } else if (input.is_object()) {
      const LinearPolynomial p = linear_from_json(input);
      selection = build_good_set({p}, epsilon, seed);
      compiled = to_json(compile_single(p, selection->set));
    } else {
      const Characteristic chi = characteristic_from_json(input);
      selection = build_good_set(chi.polynomials(), epsilon, seed);
      compiled = to_json(compile_general(chi, selection->set));
    }
  } else {
    const FunctionCase fn = function_case(f);
    selection = build_good_set({fn.polynomial}, epsilon, seed);
    compiled = to_json(compile_single(fn.polynomial, selection->set));
    compiled["function"] = fn.name;
  }
  const auto program = program_from_json(compiled["program"]);
  Json summary = {{"metrics", to_json(metrics(program))},
                  {"good_set", {{"seed", selection->seed}, {"check", to_string(selection->check)}}}};
  if (out_path.empty()) {
    out << compiled.dump() << "\n";
    return kOk;
  }
  std::ofstream file(out_path);
  if (!file) throw UsageError("cannot write " + out_path);
  file << compiled.dump() << "\n";
  summary["out"] = out_path;
  out << summary.dump(2) << "\n";
  return kOk;
}

struct LoadedProgram {
  QuantumBranchingProgram program;
  std::optional<ReferenceProbability> closed_form;
  std::optional<double> bound;
};

/// Accepts either a compiled wrapper (with polynomial and good set) or a
/// bare program object.
inline LoadedProgram load_program(const std::string &path) {
  const Json j = read_json_file(path);
  if (!j.contains("program")) return {program_from_json(j), std::nullopt, std::nullopt};
  LoadedProgram loaded{program_from_json(j.at("program")), std::nullopt, std::nullopt};
  const GoodSet set = good_set_from_json(j.at("good_set"));
  const std::string kind = j.value("kind", "");
  if (kind == "single") {
    const LinearPolynomial p = linear_from_json(j.at("polynomial"));
    loaded.closed_form = [p, set](const Bits &s) { return closed_form_single(p, set, s); };
    loaded.bound = set.epsilon();
  } else if (kind == "general") {
    const Characteristic chi = characteristic_from_json(j.at("characteristic"));
    loaded.closed_form = [chi, set](const Bits &s) { return closed_form_general(chi, set, s); };
    loaded.bound = error_bound_general(set.epsilon());
  }
  return loaded;
}

inline int cmd_eval(const std::string &path, const std::string &input, std::ostream &out) {
  const LoadedProgram loaded = load_program(path);
  Bits sigma;
  try {
    sigma = parse_bits(input);
  } catch (const InvalidArgument &e) {
    throw UsageError(e.what());
  }
  if (sigma.size() != loaded.program.arity()) {
    throw UsageError("input has " + std::to_string(sigma.size()) + " bits, program reads " +
                     std::to_string(loaded.program.arity()));
  }
  Json result = {{"accept_probability", accept_probability(loaded.program, sigma)},
                 {"closed_form", loaded.closed_form ? Json((*loaded.closed_form)(sigma)) : Json(nullptr)}};
  out << result.dump(2) << "\n";
  return kOk;
}

inline SweepMode sweep_mode(std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) return Exhaustive{};
  return Sampled{samples, seed};
}

inline int cmd_verify(const FunctionFlags &f, double epsilon, std::uint64_t seed, std::uint64_t samples,
                      unsigned workers, const std::string &program_path, std::ostream &out) {
  const FunctionCase fn = function_case(f);
  SweepMode mode = sweep_mode(samples, seed);
  if (std::holds_alternative<Exhaustive>(mode) && fn.polynomial.arity() > kExhaustiveLimit) {
    mode = Sampled{kDefaultSamples, seed};
  }
  VerificationReport report;
  if (program_path.empty()) {
    report = run_single_campaign(fn, epsilon, seed, GoodSetPolicy::kAuto, mode, workers).report;
  } else {
    const LoadedProgram loaded = load_program(program_path);
    if (loaded.program.arity() != fn.polynomial.arity()) {
      throw UsageError("program arity does not match --function");
    }
    VerifyOptions options;
    options.mode = mode;
    options.workers = workers;
    if (loaded.closed_form) options.reference = *loaded.closed_form;
    report = verify(fn.name, fn.oracle, loaded.program, loaded.bound.value_or(epsilon), options);
    report.epsilon = epsilon;
  }
  out << to_json(report).dump(2) << "\n";
  return report.pass ? kOk : kFailed;
}

inline int cmd_goodset(double epsilon, const std::string &modulus, std::uint64_t seed, std::uint64_t limit,
                       std::ostream &out) {
  BigInt m;
  try {
    m = parse_bigint(modulus);
  } catch (const InvalidArgument &e) {
    throw UsageError(e.what());
  }
  if (m < 2) throw UsageError("--modulus must be at least 2");
  const GoodSet set = sample(epsilon, Modulus(m), seed);
  Json params = Json::array();
  for (const auto &k : set.parameters()) params.push_back(k.str());
  Json verified = m <= limit ? Json(verify_exhaustive(set, limit)) : Json("skipped");
  out << Json{{"t", set.size()}, {"params", params}, {"verified", verified}}.dump(2) << "\n";
  return kOk;
}

inline HsfInstance hsf_instance(std::size_t cyclic, std::size_t generator, const std::string &table_path) {
  if (!table_path.empty()) {
    const Json j = read_json_file(table_path);
    FiniteGroup group(j.at("table").get<std::vector<std::vector<Element>>>());
    if (j.contains("order") && j.at("order").get<std::size_t>() != group.order()) {
      throw UsageError("\"order\" does not match the table");
    }
    NormalSubgroup subgroup(group, j.at("subgroup").get<std::vector<Element>>());
    return HsfInstance(std::move(group), std::move(subgroup));
  }
  if (cyclic == 0) throw UsageError("hsf needs --cyclic N or --table FILE");
  FiniteGroup group = FiniteGroup::cyclic(cyclic);
  NormalSubgroup subgroup = NormalSubgroup::generated_by(group, generator);
  return HsfInstance(std::move(group), std::move(subgroup));
}

inline int cmd_hsf(const HsfInstance &inst, double epsilon, std::uint64_t seed, bool do_sweep, std::uint64_t samples,
                   unsigned workers, std::ostream &out) {
  if (do_sweep) {
    SweepMode mode = sweep_mode(samples, seed);
    if (std::holds_alternative<Exhaustive>(mode) && inst.arity() > kExhaustiveLimit) {
      mode = Sampled{kDefaultSamples, seed};
    }
    const HsfCampaign campaign = run_hsf_campaign(inst, epsilon, seed, mode, workers);
    out << to_json(campaign.report).dump(2) << "\n";
    return campaign.report.pass ? kOk : kFailed;
  }
  const GeneralCompilation compiled = compile_hsf(inst, epsilon, seed);
  Json cosets = Json::array();
  for (const auto &c : inst.cosets().cosets) cosets.push_back(c);
  Json info = {{"order", inst.group().order()},
               {"subgroup", inst.subgroup().elements()},
               {"cosets", cosets},
               {"index", inst.index()},
               {"bits_per_value", inst.bits_per_value()},
               {"n", inst.arity()},
               {"characteristic", to_json(compiled.characteristic)},
               {"t", compiled.good_set.size()},
               {"metrics", to_json(metrics(compiled.program))}};
  out << info.dump(2) << "\n";
  return kOk;
}

/// Width table for the shipped functions at desk-scale sizes.
inline int cmd_report(double epsilon, std::uint64_t seed, bool text, std::ostream &out) {
  const std::vector<FunctionCase> cases{mod_case(64, 64), eq_case(4), palindrome_case(11), perm_case(3)};
  std::vector<SingleCompilation> compiled;
  compiled.reserve(cases.size());
  for (const auto &fn : cases) {
    compiled.push_back(compile_single(fn.polynomial, sample(epsilon, fn.polynomial.modulus(), seed)));
  }
  std::vector<WidthEntry> entries;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    entries.push_back({cases[i].name, &compiled[i].program, cases[i].deterministic_bound});
  }
  const auto rows = width_table(entries);
  if (text) {
    out << format_width_table(rows);
  } else {
    out << Json{{"epsilon", epsilon}, {"seed", seed}, {"rows", to_json(rows)}}.dump(2) << "\n";
  }
  return kOk;
}

inline int run(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
  CLI::App app{"Fingerprinting compiler and simulator for quantum OBDDs", "qobdd"};
  app.require_subcommand(1);

  FunctionFlags fn;
  double epsilon = 0.2;
  std::uint64_t seed = 0;
  std::string out_path, program_path, input, modulus, table_path;
  std::uint64_t samples = 0, verify_limit = kDefaultVerifyLimit;
  unsigned workers = 1;
  std::size_t cyclic = 0, generator = 0;
  bool do_sweep = false, text = false;

  auto *build = app.add_subcommand("build", "Compile a function into a program JSON");
  add_function_flags(build, fn, true);
  build->add_option("--epsilon", epsilon, "Error rate in (0,1)");
  build->add_option("--seed", seed, "Good-set sampling seed");
  build->add_option("--out", out_path, "Output file (stdout when omitted)");

  auto *eval = app.add_subcommand("eval", "Acceptance probability of one input");
  eval->add_option("--program", program_path, "Program JSON")->required();
  eval->add_option("--input", input, "Input bit string, sigma_1 first")->required();

  auto *verify_cmd = app.add_subcommand("verify", "Check the one-sided error contract");
  add_function_flags(verify_cmd, fn, false);
  verify_cmd->add_option("--epsilon", epsilon, "Error rate in (0,1)");
  verify_cmd->add_option("--seed", seed, "Seed for good-set and input sampling");
  verify_cmd->add_option("--samples", samples, "Sample count (exhaustive when 0)");
  verify_cmd->add_option("--workers", workers, "Sweep threads");
  verify_cmd->add_option("--program", program_path, "Verify this program instead of compiling");

  auto *goodset = app.add_subcommand("goodset", "Sample and verify a good parameter set");
  goodset->add_option("--epsilon", epsilon, "Error rate in (0,1)")->required();
  goodset->add_option("--modulus", modulus, "Modulus m (decimal)")->required();
  goodset->add_option("--seed", seed, "Sampling seed");
  goodset->add_option("--verify-limit", verify_limit, "Largest m verified exhaustively");

  auto *hsf = app.add_subcommand("hsf", "Hidden Subgroup Function program");
  hsf->add_option("--cyclic", cyclic, "Cyclic group order N");
  hsf->add_option("--subgroup-generator", generator, "Generator of the subgroup of Z_N");
  hsf->add_option("--table", table_path, "Cayley table JSON {order, table, subgroup}");
  hsf->add_option("--epsilon", epsilon, "Error rate in (0,1)");
  hsf->add_option("--seed", seed, "Seed");
  hsf->add_flag("--sweep", do_sweep, "Verify all inputs under the promise");
  hsf->add_option("--samples", samples, "Sample count (exhaustive when 0)");
  hsf->add_option("--workers", workers, "Sweep threads");

  auto *report = app.add_subcommand("report", "Width table of the shipped functions");
  report->add_option("--epsilon", epsilon, "Error rate in (0,1)");
  report->add_option("--seed", seed, "Sampling seed");
  report->add_flag("--text", text, "Plain-text table instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*build) return cmd_build(fn, epsilon, seed, out_path, out);
    if (*eval) return cmd_eval(program_path, input, out);
    if (*verify_cmd) return cmd_verify(fn, epsilon, seed, samples, workers, program_path, out);
    if (*goodset) return cmd_goodset(epsilon, modulus, seed, verify_limit, out);
    if (*hsf) {
      return cmd_hsf(hsf_instance(cyclic, generator, table_path), epsilon, seed, do_sweep, samples, workers, out);
    }
    if (*report) return cmd_report(epsilon, seed, text, out);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const QobddError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qobdd::cli
