// src/data/dataset.cpp

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

#include "melfew/data/dataset.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "melfew/common/error.hpp"

namespace melfew {
namespace data {

namespace {

std::vector<std::string> split_csv_line(const std::string &line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

void check_id_token(const std::string &id, const std::string &what,
                    const std::string &where) {
  if (id.empty()) throw Error("schema", where + ": empty " + what);
  if (id.find(',') != std::string::npos ||
      id.find('\n') != std::string::npos)
    throw Error("schema", where + ": " + what + " contains a separator");
}

std::string basename_no_ext(const std::string &path) {
  std::filesystem::path p(path);
  return p.stem().string();
}

}  // namespace

Dataset load_feature_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open feature CSV '" + path + "'");
  std::string line;
  if (!std::getline(in, line))
    throw Error("parse", path + ": empty file");
  std::vector<std::string> header = split_csv_line(line);
  if (header.size() < 5 || header[0] != "utterance_id" ||
      header[1] != "speaker_id" || header[2] != "emotion" ||
      header[3] != "domain")
    throw Error("schema", path + ": bad header (want utterance_id,speaker_id,"
                          "emotion,domain,f0,...)");
  const std::size_t dim = header.size() - 4;
  for (std::size_t d = 0; d < dim; ++d) {
    if (header[4 + d] != "f" + std::to_string(d))
      throw Error("schema", path + ": feature column " + std::to_string(d) +
                                " is named '" + header[4 + d] + "', want f" +
                                std::to_string(d));
  }

  Dataset ds;
  ds.name = basename_no_ext(path);
  std::unordered_set<std::string> seen_ids;
  bool role_set = false;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const std::string where = path + ":" + std::to_string(lineno);
    std::vector<std::string> f = split_csv_line(line);
    if (f.size() != header.size())
      throw Error("parse", where + ": expected " +
                               std::to_string(header.size()) + " fields, got " +
                               std::to_string(f.size()));
    FeatureVector fv;
    fv.utterance_id = f[0];
    fv.speaker_id = f[1];
    check_id_token(fv.utterance_id, "utterance_id", where);
    check_id_token(fv.speaker_id, "speaker_id", where);
    fv.emotion = parse_emotion(f[2]);
    fv.domain = parse_domain(f[3]);
    fv.values.resize(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      const char *begin = f[4 + d].c_str();
      char *end = nullptr;
      fv.values[d] = std::strtod(begin, &end);
      if (end == begin || *end != '\0')
        throw Error("parse", where + ": bad number in f" + std::to_string(d) +
                                 ": '" + f[4 + d] + "'");
    }
    if (!seen_ids.insert(fv.utterance_id).second)
      throw Error("schema", where + ": duplicate utterance_id '" +
                                fv.utterance_id + "'");
    if (!role_set) {
      ds.role = fv.domain;
      role_set = true;
    } else if (fv.domain != ds.role) {
      throw Error("schema", where + ": mixed domains in one dataset file");
    }
    ds.samples.push_back(std::move(fv));
  }
  return ds;
}

void save_feature_csv(const Dataset &dataset, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write feature CSV '" + path + "'");
  const std::size_t dim = dataset.dim();
  out << "utterance_id,speaker_id,emotion,domain";
  for (std::size_t d = 0; d < dim; ++d) out << ",f" << d;
  out << "\n";
  char buf[64];
  for (const FeatureVector &fv : dataset.samples) {
    check_id_token(fv.utterance_id, "utterance_id", path);
    check_id_token(fv.speaker_id, "speaker_id", path);
    if (fv.values.size() != dim)
      throw Error("shape", path + ": ragged feature dims in dataset");
    out << fv.utterance_id << "," << fv.speaker_id << ","
        << to_string(fv.emotion) << "," << to_string(fv.domain);
    for (double v : fv.values) {
      // %.17g round-trips doubles exactly.
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out << "," << buf;
    }
    out << "\n";
  }
  if (!out) throw Error("io", "short write on '" + path + "'");
}

std::vector<ManifestEntry> parse_manifest(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open manifest '" + path + "'");
  std::vector<ManifestEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string wav, speaker, emotion, domain;
    if (!(ss >> wav)) continue;  // blank line
    if (!(ss >> speaker >> emotion >> domain))
      throw Error("parse", path + ":" + std::to_string(lineno) +
                               ": want 'wav_path speaker emotion domain'");
    std::string extra;
    if (ss >> extra)
      throw Error("parse", path + ":" + std::to_string(lineno) +
                               ": trailing field '" + extra + "'");
    ManifestEntry e;
    e.wav_path = wav;
    e.speaker_id = speaker;
    e.emotion = parse_emotion(emotion);
    e.domain = parse_domain(domain);
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace data
}  // namespace melfew
