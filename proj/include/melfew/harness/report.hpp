// include/melfew/harness/report.hpp
//
// Report directory layout:
//   runs.csv       one row per (method, source, k, repetition)
//   summary.csv    per-group mean/std/pooled UAR
//   artifacts.csv  index of side products (pi histories, PCA coordinates)
//   pi_history_*.csv, pca_*.csv, warnings.txt as applicable
// The `report` step re-reads such a directory and emits plot-ready tables.

// Copyright 2026  melfew authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef MELFEW_HARNESS_REPORT_HPP_
#define MELFEW_HARNESS_REPORT_HPP_

#include <string>
#include <vector>

#include "melfew/harness/experiment.hpp"

namespace melfew {
namespace harness {

void write_report(const ExperimentReport &report, const std::string &out_dir);

// Recomputes UAR from the stored confusion counts; the stored uar column is
// not trusted.
std::vector<RunRecord> read_runs_csv(const std::string &path);

// Writes summary_table.csv, fig3_uar_vs_k.csv, fig4_pi_histogram.csv and
// fig5_pca.csv derived from a previously written report directory.
void summarize_report_dir(const std::string &report_dir,
                          const std::string &out_dir);

}  // namespace harness
}  // namespace melfew

#endif  // MELFEW_HARNESS_REPORT_HPP_
