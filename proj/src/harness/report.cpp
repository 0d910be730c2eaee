// src/harness/report.cpp

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

#include "melfew/harness/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "melfew/common/error.hpp"
#include "melfew/common/kv.hpp"
#include "melfew/sampler/aspf.hpp"

namespace melfew {
namespace harness {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write '" + path + "'");
  return out;
}

void finish(std::ofstream *out, const std::string &path) {
  out->flush();
  if (!*out) throw Error("io", "short write on '" + path + "'");
}

// Filename-safe tag: anything outside [A-Za-z0-9._-] becomes '_'; the
// literal "-" source (in-domain) contributes nothing.
std::string file_tag(const std::string &source, int k, int rep) {
  std::string tag;
  if (source != "-") {
    for (char c : source) {
      bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '_';
      tag += ok ? c : '_';
    }
    tag += '_';
  }
  tag += "k" + std::to_string(k) + "_rep" + std::to_string(rep);
  return tag;
}

std::vector<std::string> split_csv(const std::string &line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

std::vector<std::vector<std::string>> read_csv(const std::string &path,
                                               const std::string &header) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot read '" + path + "'");
  std::string line;
  if (!std::getline(in, line))
    throw Error("parse", path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header)
    throw Error("schema", path + ": unexpected header '" + line + "'");
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(split_csv(line));
  }
  return rows;
}

constexpr const char *kRunsHeader =
    "method,source,k,repetition,uar,n_test,"
    "c_aa,c_ah,c_as,c_ha,c_hh,c_hs,c_sa,c_sh,c_ss";
constexpr const char *kSummaryHeader =
    "method,source,k,repetitions,mean_uar,std_uar,pooled_uar";
constexpr const char *kArtifactsHeader = "kind,source,k,repetition,file";
constexpr const char *kPcaHeader = "utterance_id,emotion,pc1,pc2";
constexpr const char *kPiHeader = "iteration,utterance_id,pi";

void write_summary_rows(std::ofstream *out,
                        const std::vector<SummaryRow> &rows) {
  *out << kSummaryHeader << "\n";
  for (const SummaryRow &row : rows)
    *out << to_string(row.method) << "," << row.source << "," << row.k << ","
         << row.repetitions << "," << fmt_double(row.mean_uar) << ","
         << fmt_double(row.std_uar) << "," << fmt_double(row.pooled_uar)
         << "\n";
}

struct Artifact {
  std::string kind;
  std::string source;
  int k = 0;
  int repetition = 0;
  std::string file;
};

}  // namespace

void write_report(const ExperimentReport &report, const std::string &out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec)
    throw Error("io", "cannot create report directory '" + out_dir +
                          "': " + ec.message());

  {
    std::string path = out_dir + "/runs.csv";
    std::ofstream out = open_out(path);
    out << kRunsHeader << "\n";
    for (const RunRecord &run : report.runs) {
      out << to_string(run.method) << "," << run.source << "," << run.k << ","
          << run.repetition << "," << fmt_double(run.uar) << ","
          << run.confusion.total();
      for (std::size_t i = 0; i < data::kNumEmotions; ++i)
        for (std::size_t j = 0; j < data::kNumEmotions; ++j)
          out << "," << run.confusion.counts[i][j];
      out << "\n";
    }
    finish(&out, path);
  }

  {
    std::string path = out_dir + "/summary.csv";
    std::ofstream out = open_out(path);
    write_summary_rows(&out, summarize_runs(report.runs));
    finish(&out, path);
  }

  std::vector<Artifact> artifacts;
  for (const PiHistoryExport &ph : report.pi_histories) {
    std::string name =
        "pi_history_" + file_tag(ph.source, ph.k, ph.repetition) + ".csv";
    sampler::write_pi_history_csv(out_dir + "/" + name, ph.entries);
    artifacts.push_back({"pi_history", ph.source, ph.k, ph.repetition, name});
  }
  for (const PcaExport &pe : report.pca_exports) {
    std::string name = "pca_" + file_tag(pe.source, pe.k, pe.repetition) +
                       ".csv";
    std::string path = out_dir + "/" + name;
    std::ofstream out = open_out(path);
    out << kPcaHeader << "\n";
    for (const PcaRow &row : pe.rows)
      out << row.utterance_id << "," << data::to_string(row.emotion) << ","
          << fmt_double(row.pc1) << "," << fmt_double(row.pc2) << "\n";
    finish(&out, path);
    artifacts.push_back({"pca", pe.source, pe.k, pe.repetition, name});
  }

  {
    std::string path = out_dir + "/artifacts.csv";
    std::ofstream out = open_out(path);
    out << kArtifactsHeader << "\n";
    for (const Artifact &a : artifacts)
      out << a.kind << "," << a.source << "," << a.k << "," << a.repetition
          << "," << a.file << "\n";
    finish(&out, path);
  }

  if (!report.warnings.empty()) {
    std::string path = out_dir + "/warnings.txt";
    std::ofstream out = open_out(path);
    for (const std::string &w : report.warnings) out << w << "\n";
    finish(&out, path);
  }
}

std::vector<RunRecord> read_runs_csv(const std::string &path) {
  std::vector<RunRecord> runs;
  for (const std::vector<std::string> &f : read_csv(path, kRunsHeader)) {
    if (f.size() != 15)
      throw Error("schema", path + ": run row needs 15 fields, got " +
                                std::to_string(f.size()));
    RunRecord run;
    run.method = parse_method(f[0]);
    run.source = f[1];
    run.k = static_cast<int>(parse_int(f[2], path + ": k"));
    run.repetition = static_cast<int>(parse_int(f[3], path + ": repetition"));
    std::uint64_t n_test =
        static_cast<std::uint64_t>(parse_int(f[5], path + ": n_test"));
    std::size_t field = 6;
    for (std::size_t i = 0; i < data::kNumEmotions; ++i)
      for (std::size_t j = 0; j < data::kNumEmotions; ++j)
        run.confusion.counts[i][j] = static_cast<std::uint64_t>(
            parse_int(f[field++], path + ": confusion count"));
    if (run.confusion.total() != n_test)
      throw Error("schema",
                  path + ": n_test disagrees with confusion counts");
    run.uar = uar(run.confusion).value;
    runs.push_back(std::move(run));
  }
  if (runs.empty()) throw Error("schema", path + ": no runs");
  return runs;
}

namespace {

std::vector<Artifact> read_artifacts_csv(const std::string &path) {
  std::vector<Artifact> artifacts;
  for (const std::vector<std::string> &f : read_csv(path, kArtifactsHeader)) {
    if (f.size() != 5)
      throw Error("schema", path + ": artifact row needs 5 fields");
    Artifact a;
    a.kind = f[0];
    a.source = f[1];
    a.k = static_cast<int>(parse_int(f[2], path + ": k"));
    a.repetition = static_cast<int>(parse_int(f[3], path + ": repetition"));
    a.file = f[4];
    if (a.file.find('/') != std::string::npos ||
        a.file.find("..") != std::string::npos)
      throw Error("schema", path + ": artifact file must be a plain name");
    artifacts.push_back(std::move(a));
  }
  return artifacts;
}

struct PiPoint {
  int iteration = 0;
  double pi = 1.0;
};

std::vector<PiPoint> read_pi_history(const std::string &path) {
  std::vector<PiPoint> points;
  for (const std::vector<std::string> &f : read_csv(path, kPiHeader)) {
    if (f.size() != 3)
      throw Error("schema", path + ": pi row needs 3 fields");
    PiPoint p;
    p.iteration = static_cast<int>(parse_int(f[0], path + ": iteration"));
    p.pi = parse_double(f[2], path + ": pi");
    points.push_back(p);
  }
  return points;
}

constexpr int kPiBins = 20;

}  // namespace

void summarize_report_dir(const std::string &report_dir,
                          const std::string &out_dir) {
  std::vector<RunRecord> runs = read_runs_csv(report_dir + "/runs.csv");
  std::vector<SummaryRow> summary = summarize_runs(runs);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec)
    throw Error("io", "cannot create output directory '" + out_dir +
                          "': " + ec.message());

  {
    std::string path = out_dir + "/summary_table.csv";
    std::ofstream out = open_out(path);
    write_summary_rows(&out, summary);
    finish(&out, path);
  }

  {
    // UAR-vs-k curve; k = 0 rows are the flat domain baselines.
    std::string path = out_dir + "/fig3_uar_vs_k.csv";
    std::ofstream out = open_out(path);
    out << "method,source,k,mean_uar,std_uar\n";
    for (const SummaryRow &row : summary)
      out << to_string(row.method) << "," << row.source << "," << row.k << ","
          << fmt_double(row.mean_uar) << "," << fmt_double(row.std_uar)
          << "\n";
    finish(&out, path);
  }

  std::vector<Artifact> artifacts =
      read_artifacts_csv(report_dir + "/artifacts.csv");

  {
    // Per-iteration histogram of pi values, 20 bins spanning [1, max pi]
    // of each history so iterations within one run share bin edges.
    std::string path = out_dir + "/fig4_pi_histogram.csv";
    std::ofstream out = open_out(path);
    out << "source,k,repetition,iteration,bin_lo,bin_hi,count\n";
    for (const Artifact &a : artifacts) {
      if (a.kind != "pi_history") continue;
      std::vector<PiPoint> points =
          read_pi_history(report_dir + "/" + a.file);
      if (points.empty()) continue;
      double hi = 1.0;
      int max_iter = 0;
      for (const PiPoint &p : points) {
        hi = std::max(hi, p.pi);
        max_iter = std::max(max_iter, p.iteration);
      }
      const std::string prefix =
          a.source + "," + std::to_string(a.k) + "," +
          std::to_string(a.repetition) + ",";
      for (int it = 1; it <= max_iter; ++it) {
        if (hi <= 1.0) {
          std::uint64_t count = 0;
          for (const PiPoint &p : points)
            if (p.iteration == it) ++count;
          out << prefix << it << ",1,1," << count << "\n";
          continue;
        }
        const double width = (hi - 1.0) / kPiBins;
        std::array<std::uint64_t, kPiBins> bins{};
        for (const PiPoint &p : points) {
          if (p.iteration != it) continue;
          int b = static_cast<int>((p.pi - 1.0) / width);
          if (b < 0) b = 0;
          if (b >= kPiBins) b = kPiBins - 1;
          ++bins[static_cast<std::size_t>(b)];
        }
        for (int b = 0; b < kPiBins; ++b)
          out << prefix << it << "," << fmt_double(1.0 + b * width) << ","
              << fmt_double(1.0 + (b + 1) * width) << ","
              << bins[static_cast<std::size_t>(b)] << "\n";
      }
    }
    finish(&out, path);
  }

  {
    std::string path = out_dir + "/fig5_pca.csv";
    std::ofstream out = open_out(path);
    out << "source,k,repetition,utterance_id,emotion,pc1,pc2\n";
    for (const Artifact &a : artifacts) {
      if (a.kind != "pca") continue;
      for (const std::vector<std::string> &f :
           read_csv(report_dir + "/" + a.file, kPcaHeader)) {
        if (f.size() != 4)
          throw Error("schema", a.file + ": pca row needs 4 fields");
        out << a.source << "," << a.k << "," << a.repetition << "," << f[0]
            << "," << f[1] << "," << f[2] << "," << f[3] << "\n";
      }
    }
    finish(&out, path);
  }
}

}  // namespace harness
}  // namespace melfew
