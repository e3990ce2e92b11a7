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

// Command-line front end. `run` is the whole program minus process setup so
// it can be driven in-process by tests.
//
// Exit codes: 0 success, 1 usage error, 2 input validation failure,
// 3 internal invariant failure.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spapt/measures.hpp"
#include "spapt/shotsim.hpp"
#include "spapt/spa.hpp"
#include "spapt/states.hpp"

namespace spapt::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kInternal = 3 };

/// argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits, '.' separator, locale independent.
std::string format_double(double x);

inline constexpr const char* kSweepHeader =
    "param,nd_definition,nd_closed_form,mu_min,nn_pipeline,nn_closed_form,abs_gap";
inline constexpr const char* kRandomStudyHeader =
    "seed_index,rank,nd,nn,mu_min,concurrence,ppt,neg_pt_eigs";

struct SweepRow {
  double param = 0.0;
  double nd_definition = 0.0;
  double nd_closed_form = 0.0;
  double mu_min = 0.0;
  double nn_pipeline = 0.0;
  double nn_closed_form = 0.0;
  double abs_gap = 0.0;
};

/// family must be PureM, Horodecki or Quasi; points >= 2.
std::vector<SweepRow> sweep(StateSpec::Kind family, int points);
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct StudyRow {
  std::uint64_t seed_index = 0;
  int rank = 4;
  EntanglementReport report;
};

/// Largest violation of each invariant over a random study.
struct StudySummary {
  double tightness = 0.0;      // |nd - max(0, 4 - 18 mu)|
  double universal = 0.0;      // |nn - nd (338 + nd) / 339|
  double mu_range = 0.0;       // distance of mu outside [1/6, 1/4]
  double verstraete = 0.0;     // max(0, verstraete_rhs(C) - nd)
  std::uint64_t ppt_mismatch = 0;  // ppt != (mu >= 2/9 - 1e-10)
  int max_neg_pt_eigs = 0;
};

/// State i is random_mixed(derive_seed(seed, i), rank).
std::vector<StudyRow> random_study(std::uint64_t count, std::uint64_t seed, int rank);
StudySummary summarize(const std::vector<StudyRow>& rows);
/// Rows followed by a `summary` footer whose columns carry the StudySummary
/// fields in header order.
std::string random_study_csv(const std::vector<StudyRow>& rows);

std::string report_json(const EntanglementReport& report);
std::string shot_estimate_json(const ShotEstimate& est, const EntanglementReport& exact);
std::string spa_verify_text(const SpaVerifyReport& report);

}  // namespace spapt::cli
