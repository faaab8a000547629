// Copyright 2026 The chanreduce Authors.
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

#include "cli.h"

#include <charconv>
#include <fstream>
#include <optional>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "chanreduce/bounds.h"
#include "chanreduce/channel_gen.h"
#include "chanreduce/channel_io.h"
#include "chanreduce/error.h"
#include "chanreduce/information.h"
#include "chanreduce/onehot_degrade.h"
#include "chanreduce/onehot_upgrade.h"
#include "result_json.h"
#include "suites.h"
#include "sweep.h"

namespace chanreduce::cli {
namespace {

struct Source {
  std::string channel;
  std::string gen;
  std::optional<uint64_t> seed;
};

void add_source(CLI::App* cmd, Source& s) {
  auto* channel = cmd->add_option("--channel", s.channel, "Channel JSON file");
  auto* gen = cmd->add_option("--gen", s.gen, "Generator kind:q:param:seed");
  channel->excludes(gen);
  cmd->add_option("--seed", s.seed, "Override the seed of a random generator");
}

JointDistribution load(const Source& s) {
  if (!s.channel.empty()) return read_channel_json(s.channel);
  if (s.gen.empty()) throw ChannelError(ErrorCode::kParse, "need --channel or --gen");
  GeneratorSpec spec = GeneratorSpec::parse(s.gen);
  if (s.seed) spec.seed = *s.seed;
  return generate(spec);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) {
    throw ChannelError(ErrorCode::kParse, "cannot write '" + path + "'");
  }
}

std::vector<int64_t> parse_list(const std::string& text) {
  std::vector<int64_t> out;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    int64_t v = 0;
    const auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || p != item.data() + item.size()) {
      throw ChannelError(ErrorCode::kParse, "bad entry '" + item + "' in L list");
    }
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kNonStochastic:
    case ErrorCode::kNegativeEntry:
    case ErrorCode::kDegenerateInput:
      return kExitParse;
    default:
      return kExitPrecondition;
  }
}

std::string summary(double delta_I, double bound, int L_actual, bool bits) {
  auto u = [&](double v) { return format_double(bits ? nats_to_bits(v) : v); };
  return "delta_I=" + u(delta_I) + " bound=" + u(bound) + " L_actual=" + std::to_string(L_actual) +
         "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Output-alphabet reduction of discrete channels by one-hot upgrading and degrading"};
  app.name(args.empty() ? "chanreduce" : args[0]);
  app.require_subcommand(1);

  Source src;
  std::string out_path, units = "nats", mode = "upgrade", L_list, suite, quantizer_out, pxz_csv;
  int64_t L = 0;
  int jobs = 1;
  bool no_timing = false;
  SuiteOptions sopt;

  auto* gen = app.add_subcommand("gen", "Write a generated channel as JSON");
  gen->add_option("--gen", src.gen, "Generator kind:q:param:seed")->required();
  gen->add_option("--seed", src.seed, "Override the seed of a random generator");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto units_check = CLI::IsMember({"nats", "bits"});
  auto* up = app.add_subcommand("upgrade", "Upgrade a channel to at most L outputs");
  auto* down = app.add_subcommand("degrade", "Degrade a channel to at most L outputs");
  for (auto* cmd : {up, down}) {
    add_source(cmd, src);
    cmd->add_option("--L", L, "Output budget")->required();
    cmd->add_option("--units", units, "Summary units")->check(units_check);
    cmd->add_option("--out", out_path, "Result JSON file");
    cmd->add_option("--pxz-csv", pxz_csv, "Reduced joint as x,y,p CSV");
  }
  down->add_option("--quantizer-out", quantizer_out, "Quantizer CSV");

  auto* sweep = app.add_subcommand("sweep", "Run one reduction per L and write CSV");
  add_source(sweep, src);
  sweep->add_option("--mode", mode, "upgrade or degrade")
      ->check(CLI::IsMember({"upgrade", "degrade"}));
  sweep->add_option("--L-list", L_list, "Comma-separated budgets")->required();
  sweep->add_option("--out", out_path, "CSV file (default stdout)");
  sweep->add_option("--jobs", jobs, "Concurrent runs")->check(CLI::PositiveNumber);
  sweep->add_option("--units", units, "CSV units")->check(units_check);
  sweep->add_flag("--no-timing", no_timing, "Leave elapsed_ms empty for reproducible files");

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", suite, "lemma, sphere, claims, bounds or oracle")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", sopt.seed, "Suite seed");
  verify->add_option("--instances", sopt.instances, "Number of instances");
  verify->add_option("--max-outputs", sopt.max_outputs, "Largest output alphabet");
  verify->add_option("--q", sopt.q, "Largest input alphabet");
  verify->add_option("--lambda", sopt.lambda, "Per-coordinate budget (claims)");
  verify->add_option("--points", sopt.points, "Grid points (lemma)");
  verify->add_option("--out", out_path, "Where to write an offending instance");

  std::string kind_name;
  int q = 2;
  auto* bnd = app.add_subcommand("bound", "Evaluate a closed-form bound");
  bnd->add_option("--kind", kind_name,
                  "binary-up, binary-down, onehot-up, onehot-down, per-step-up, per-step-down")
      ->required();
  bnd->add_option("--q", q, "Input alphabet size");
  bnd->add_option("--L", L, "Budget, or alphabet size for per-step kinds")->required();
  bnd->add_option("--units", units, "Output units")->check(units_check);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }
  const bool bits = units == "bits";

  try {
    if (*gen) {
      GeneratorSpec spec = GeneratorSpec::parse(src.gen);
      if (src.seed) spec.seed = *src.seed;
      const std::string text = channel_json(generate(spec));
      if (out_path.empty()) {
        out << text;
      } else {
        write_text(out_path, text);
      }
      return kExitOk;
    }
    if (*up) {
      const auto joint = load(src);
      const auto r = upgrade(joint, L);
      if (!out_path.empty()) write_text(out_path, upgrade_json(r));
      if (!pxz_csv.empty()) write_text(pxz_csv, joint_csv(r.pstar_xz));
      out << summary(r.delta_I, r.bound, r.pstar_xz.n(), bits);
      return kExitOk;
    }
    if (*down) {
      const auto joint = load(src);
      const auto r = degrade(joint, L);
      if (!out_path.empty()) write_text(out_path, degrade_json(r));
      if (!pxz_csv.empty()) write_text(pxz_csv, joint_csv(r.pxz));
      if (!quantizer_out.empty()) {
        write_text(quantizer_out, r.q == 2 ? binary_quantizer_csv(joint.labels(), r.quantizer)
                                           : onehot_quantizer_csv(joint.labels(), r.z_tuples,
                                                                  r.quantizer));
      }
      out << summary(r.delta_I, r.bound, r.pxz.n(), bits);
      return kExitOk;
    }
    if (*sweep) {
      const auto joint = load(src);
      const auto rows = run_sweep(joint, mode == "upgrade" ? Mode::kUpgrade : Mode::kDegrade,
                                  parse_list(L_list), jobs);
      const std::string csv = sweep_csv(rows, bits, !no_timing);
      if (out_path.empty()) {
        out << csv;
      } else {
        write_text(out_path, csv);
      }
      bool failed = false;
      for (const auto& r : rows) {
        if (!r.delta_I) {
          err << "L=" << r.L_design << ": " << r.error << "\n";
          failed = true;
        }
      }
      const auto slope = loglog_slope(rows);
      out << "slope=" << (slope ? format_double(*slope) : std::string("nan"))
          << " points=" << rows.size() << "\n";
      return failed ? kExitFailure : kExitOk;
    }
    if (*verify) {
      const SuiteReport rep = run_suite(suite, sopt);
      out << format_report(rep);
      if (!rep.passed()) {
        out << "offending=" << rep.offending << "\n";
        if (!out_path.empty()) write_text(out_path, rep.offending + "\n");
        return kExitFailure;
      }
      return kExitOk;
    }
    if (*bnd) {
      const auto kind = parse_bound_kind(kind_name);
      if (!kind) throw ChannelError(ErrorCode::kParse, "unknown bound kind '" + kind_name + "'");
      const BoundReport r = bound_report(*kind, q, L);
      out << "bound=" << format_double(bits ? nats_to_bits(r.value) : r.value)
          << " lambda=" << r.lambda << "\n";
      return kExitOk;
    }
  } catch (const ChannelError& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitParse;
}

}  // namespace chanreduce::cli
