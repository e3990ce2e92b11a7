// Copyright 2026 The spapt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spapt/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "json.hpp"

namespace spapt::cli {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

// ---------------------------------------------------------------- sweep

std::vector<SweepRow> sweep(StateSpec::Kind family, int points) {
  if (points < 2) throw InputError("sweep needs at least 2 grid points");
  using K = StateSpec::Kind;
  if (family != K::PureM && family != K::Horodecki && family != K::Quasi)
    throw InputError(fmt::format("sweep does not support family {}", family_name(family)));

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double x = static_cast<double>(i) / (points - 1);
    const DensityMatrix rho = resolve({family, x, std::nullopt});
    SweepRow r;
    r.param = x;
    r.nd_definition = negativity_exact(rho);
    r.mu_min = spa_pt_affine(rho).mu_min;
    r.nn_pipeline = negativity_normalized(r.mu_min);
    switch (family) {
      case K::PureM: {
        const double n = 2.0 * std::sqrt(x * (1.0 - x));
        r.nd_closed_form = n;
        r.nn_closed_form = 54.0 * n / 9153.0 * (169.0 + n / 2.0);
        break;
      }
      case K::Horodecki: {
        const double n = std::sqrt((1.0 - x) * (1.0 - x) + x * x) - (1.0 - x);
        r.nd_closed_form = n;
        r.nn_closed_form = n / 339.0 * (338.0 + n);
        break;
      }
      default: {
        const double n = verstraete_rhs(x);
        r.nd_closed_form = n;
        r.nn_closed_form = n / 339.0 * (338.0 + n);
        break;
      }
    }
    r.abs_gap = std::abs(r.nn_pipeline - r.nd_definition);
    rows.push_back(r);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kSweepHeader) + "\n";
  for (const auto& r : rows)
    out += fmt::format("{},{},{},{},{},{},{}\n", format_double(r.param),
                       format_double(r.nd_definition), format_double(r.nd_closed_form),
                       format_double(r.mu_min), format_double(r.nn_pipeline),
                       format_double(r.nn_closed_form), format_double(r.abs_gap));
  return out;
}

namespace {
ordered_json sweep_json(const std::vector<SweepRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"param", r.param},
                   {"nd_definition", r.nd_definition},
                   {"nd_closed_form", r.nd_closed_form},
                   {"mu_min", r.mu_min},
                   {"nn_pipeline", r.nn_pipeline},
                   {"nn_closed_form", r.nn_closed_form},
                   {"abs_gap", r.abs_gap}});
  return arr;
}
}  // namespace

// --------------------------------------------------------- random study

std::vector<StudyRow> random_study(std::uint64_t count, std::uint64_t seed, int rank) {
  std::vector<StudyRow> rows;
  rows.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const DensityMatrix rho = random_mixed(derive_seed(seed, i), rank);
    rows.push_back({i, rank, full_report(rho)});
  }
  return rows;
}

StudySummary summarize(const std::vector<StudyRow>& rows) {
  StudySummary s;
  for (const auto& row : rows) {
    const auto& r = row.report;
    s.tightness = std::max(s.tightness, std::abs(r.nd - std::max(0.0, 4.0 - 18.0 * r.mu_min)));
    s.universal = std::max(s.universal, std::abs(r.nn - r.nd * (338.0 + r.nd) / 339.0));
    s.mu_range = std::max({s.mu_range, kMuMinLowest - r.mu_min, r.mu_min - kMuMinHighest});
    s.verstraete = std::max(s.verstraete, verstraete_rhs(std::min(1.0, r.concurrence)) - r.nd);
    if (r.ppt != (r.mu_min >= kMuMinSeparable - 1e-10)) ++s.ppt_mismatch;
    s.max_neg_pt_eigs = std::max(s.max_neg_pt_eigs, r.neg_pt_eigs);
  }
  return s;
}

std::string random_study_csv(const std::vector<StudyRow>& rows) {
  std::string out = std::string(kRandomStudyHeader) + "\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    out += fmt::format("{},{},{},{},{},{},{},{}\n", row.seed_index, row.rank,
                       format_double(r.nd), format_double(r.nn), format_double(r.mu_min),
                       format_double(r.concurrence), r.ppt ? 1 : 0, r.neg_pt_eigs);
  }
  const StudySummary s = summarize(rows);
  out += fmt::format("summary,{},{},{},{},{},{},{}\n", rows.empty() ? 0 : rows.front().rank,
                     format_double(s.tightness), format_double(s.universal),
                     format_double(s.mu_range), format_double(s.verstraete), s.ppt_mismatch,
                     s.max_neg_pt_eigs);
  return out;
}

// ------------------------------------------------------------ reports

namespace {
ordered_json report_object(const EntanglementReport& r) {
  ordered_json j = {{"nd", r.nd},
                    {"nn", r.nn},
                    {"lower_bound", r.lower_bound},
                    {"mu_min", r.mu_min},
                    {"concurrence", r.concurrence},
                    {"ppt", r.ppt},
                    {"bias", r.bias},
                    {"neg_pt_eigs", r.neg_pt_eigs}};
  if (r.concurrence_pure_estimate) j["concurrence_pure_estimate"] = *r.concurrence_pure_estimate;
  if (r.concurrence_quasi_estimate)
    j["concurrence_quasi_estimate"] = *r.concurrence_quasi_estimate;
  if (r.ls_bound) j["ls_bound"] = *r.ls_bound;
  return j;
}
}  // namespace

std::string report_json(const EntanglementReport& report) {
  return report_object(report).dump(2) + "\n";
}

std::string shot_estimate_json(const ShotEstimate& est, const EntanglementReport& exact) {
  ordered_json j = {{"favg_hat", est.favg_hat},
                    {"mu_hat", est.mu_hat},
                    {"nn_hat", est.nn_hat},
                    {"shots", est.shots},
                    {"trials", est.trials},
                    {"mean_favg", est.mean_favg},
                    {"std_favg", est.std_favg},
                    {"mean_nn", est.mean_nn},
                    {"std_nn", est.std_nn},
                    {"ci95", {est.ci95.first, est.ci95.second}},
                    {"clamp_events", est.clamp_events},
                    {"zero_nn_trials", est.zero_nn_trials},
                    {"exact_favg", favg_from_mu(exact.mu_min)},
                    {"exact_mu_min", exact.mu_min},
                    {"exact_nn", exact.nn},
                    {"exact_nd", exact.nd}};
  return j.dump(2) + "\n";
}

std::string spa_verify_text(const SpaVerifyReport& r) {
  std::ostringstream os;
  auto line = [&os](const std::string& s) { os << s << '\n'; };
  auto cp = [](const ChoiReport& c) {
    return fmt::format("min eigenvalue {:+.3e}  {}", c.min_eigenvalue,
                       c.is_cp ? "completely positive" : "NOT completely positive");
  };

  line("SPA-PT verification report");
  line("");
  line("[measurement constants]");
  line(fmt::format("  POVM completeness residual max|sum M_k - I| = {:.3e}",
                   r.povm_completeness_residual));
  line(fmt::format("  |s_k| normalization defect              = {:.3e}", r.s_norm_defect));
  line(fmt::format("  max|T~(rho) - (rho^T + I)/3|            = {:.3e}",
                   r.transpose_tilde_closed_form_dev));
  line(fmt::format("  closed-form T~ fallback engaged         = {}",
                   r.fallback_engaged ? "yes" : "no"));
  line("");
  line(fmt::format("[random states: {}]", r.random_states));
  line(fmt::format("  compositional vs affine max deviation   = {:.3e}",
                   r.compositional_vs_affine_max_dev));
  line(fmt::format("  trace relation max residual             = {:.3e}",
                   r.trace_relation_max_residual));
  line(fmt::format("  spectrum mapping max residual           = {:.3e}",
                   r.spectrum_mapping_max_residual));
  line(fmt::format("  affine outputs failing validation       = {}", r.affine_invalid_outputs));
  line(fmt::format("  mu_min outside [1/6, 1/4] by at most    = {:.3e}",
                   r.affine_mu_range_violation));
  line("");

  auto table = [&](const char* title, const char* pname, const std::vector<LiteralRow>& rows) {
    line(title);
    line(fmt::format("  {:>6} {:>20} {:>20} {:>10} {:>12} {:>6}", pname, "mu_literal",
                     "mu_closed_form", "|diff|", "max|lit-aff|", "state"));
    for (const auto& row : rows)
      line(fmt::format("  {:>6.3f} {:>20.17f} {:>20.17f} {:>10.2e} {:>12.4e} {:>6}", row.param,
                       row.mu_literal, row.mu_closed_form,
                       std::abs(row.mu_literal - row.mu_closed_form), row.max_dev_from_affine,
                       row.literal_is_state ? "yes" : "no"));
    line("");
  };
  table("[paper-literal entries, pure_m family]", "M", r.literal_pure_m);
  table("[paper-literal entries, horodecki family]", "p", r.literal_horodecki);

  line("[Choi operators]");
  line("  affine SPA-PT        " + cp(r.choi_affine));
  line("  compositional SPA-PT " + cp(r.choi_compositional));
  line("  partial transpose    " + cp(r.choi_partial_transpose));
  line("  identity             " + cp(r.choi_identity));
  line("");
  line(std::string("affine invariants: ") + (r.affine_ok ? "PASS" : "FAIL"));
  return os.str();
}

// ---------------------------------------------------------------- run

namespace {

struct Options {
  std::string family;
  std::string state_path;
  std::optional<double> param;
  int points = 101;
  std::uint64_t count = 1000;
  int rank = 4;
  std::uint64_t shots = 100000;
  std::uint64_t trials = 100;
  std::uint64_t seed = 12345;
  std::string out_path;
  std::string format;
  bool verify = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FileInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_state_options(CLI::App* cmd, Options& o) {
  auto* fam = cmd->add_option("--family", o.family, "pure_m | horodecki | quasi | bell");
  auto* st = cmd->add_option("--state", o.state_path, "JSON state file");
  fam->excludes(st);
  cmd->add_option("--param", o.param, "family parameter (M, p, C or Bell index)");
}

StateSpec state_spec(const Options& o) {
  if (!o.state_path.empty()) {
    StateSpec s;
    s.kind = StateSpec::Kind::Raw;
    s.source_path = o.state_path;
    return s;
  }
  if (o.family.empty()) throw UsageError("one of --family or --state is required");
  const auto kind = parse_family(o.family);
  if (!kind) throw UsageError("unknown family: " + o.family);
  if (*kind != StateSpec::Kind::Bell && !o.param)
    throw UsageError("family " + o.family + " requires --param");
  return {*kind, o.param.value_or(0.0), std::nullopt};
}

DensityMatrix load(const Options& o) {
  const StateSpec spec = state_spec(o);
  if (spec.kind == StateSpec::Kind::Raw) {
    try {
      return resolve(spec);
    } catch (const std::exception& e) {
      throw FileInputError(e.what());
    }
  }
  try {
    return resolve(spec);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + o.out_path);
  f << text;
}

std::string want_format(const Options& o, const char* fallback) {
  const std::string f = o.format.empty() ? fallback : o.format;
  if (f != "csv" && f != "json") throw UsageError("--format must be csv or json");
  return f;
}

std::string analyze_csv(const EntanglementReport& r) {
  return fmt::format("nd,nn,lower_bound,mu_min,concurrence,ppt,bias\n{},{},{},{},{},{},{}\n",
                     format_double(r.nd), format_double(r.nn), format_double(r.lower_bound),
                     format_double(r.mu_min), format_double(r.concurrence), r.ppt ? 1 : 0,
                     format_double(r.bias));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-qubit entanglement from the SPA of the partial transpose", "spapt"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "entanglement report for one state");
  add_state_options(analyze, o);
  analyze->add_option("--format", o.format, "json (default) | csv");
  analyze->add_option("--out", o.out_path);

  auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep over a family (CSV)");
  sweep_cmd->add_option("--family", o.family, "pure_m | horodecki | quasi")->required();
  sweep_cmd->add_option("--points", o.points, "grid points, >= 2");
  sweep_cmd->add_option("--format", o.format, "csv (default) | json");
  sweep_cmd->add_option("--out", o.out_path);

  auto* study = app.add_subcommand("random-study", "invariants over random mixed states");
  study->add_option("--count", o.count, "number of states, >= 1");
  study->add_option("--seed", o.seed);
  study->add_option("--rank", o.rank, "Ginibre rank 1..4 (default 4)");
  study->add_option("--out", o.out_path);

  auto* simulate = app.add_subcommand("simulate", "finite-shot estimation of N^N");
  add_state_options(simulate, o);
  simulate->add_option("--shots", o.shots, ">= 1");
  simulate->add_option("--trials", o.trials, ">= 1");
  simulate->add_option("--seed", o.seed);
  simulate->add_option("--out", o.out_path);

  auto* verify = app.add_subcommand("spa-verify", "SPA-PT construction audit");
  verify->add_option("--seed", o.seed);
  verify->add_option("--count", o.count, "random states (default 1000)");
  verify->add_option("--points", o.points, "literal-table grid points (default 11)");
  verify->add_option("--out", o.out_path);
  auto* spa = app.add_subcommand("spa", "alias: spa --verify");
  spa->add_flag("--verify", o.verify)->required();
  spa->add_option("--seed", o.seed);
  spa->add_option("--count", o.count);
  spa->add_option("--points", o.points);
  spa->add_option("--out", o.out_path);

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze->parsed()) {
      const EntanglementReport r = full_report(load(o));
      emit(o, want_format(o, "json") == "json" ? report_json(r) : analyze_csv(r), out);
    } else if (sweep_cmd->parsed()) {
      const auto kind = parse_family(o.family);
      if (!kind || *kind == StateSpec::Kind::Bell)
        throw UsageError("sweep family must be pure_m, horodecki or quasi");
      if (o.points < 2) throw UsageError("--points must be >= 2");
      const auto rows = sweep(*kind, o.points);
      emit(o, want_format(o, "csv") == "csv" ? sweep_csv(rows) : sweep_json(rows).dump(2) + "\n",
           out);
    } else if (study->parsed()) {
      if (o.count < 1) throw UsageError("--count must be >= 1");
      if (o.rank < 1 || o.rank > 4) throw UsageError("--rank must be 1..4");
      emit(o, random_study_csv(random_study(o.count, o.seed, o.rank)), out);
    } else if (simulate->parsed()) {
      if (o.shots < 1 || o.trials < 1) throw UsageError("--shots and --trials must be >= 1");
      const DensityMatrix rho = load(o);
      const ShotEstimate est = estimate_negativity(rho, o.shots, o.trials, o.seed);
      emit(o, shot_estimate_json(est, full_report(rho)), out);
    } else if (verify->parsed() || spa->parsed()) {
      if (o.points < 2) throw UsageError("--points must be >= 2");
      if (o.count < 1) throw UsageError("--count must be >= 1");
      const SpaVerifyReport rep =
          run_spa_verification(o.seed, static_cast<int>(o.count), o.points);
      emit(o, spa_verify_text(rep), out);
      return rep.affine_ok ? kOk : kInternal;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FileInputError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace spapt::cli
