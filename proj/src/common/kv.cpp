// src/common/kv.cpp

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

#include "melfew/common/kv.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "melfew/common/error.hpp"

namespace melfew {

namespace {

std::string trim(const std::string &s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

double parse_double(const std::string &text, const std::string &what) {
  const char *begin = text.c_str();
  char *end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw Error("parse", what + ": expected a number, got '" + text + "'");
  return v;
}

std::int64_t parse_int(const std::string &text, const std::string &what) {
  const char *begin = text.c_str();
  char *end = nullptr;
  long long v = std::strtoll(begin, &end, 10);
  if (end == begin || *end != '\0')
    throw Error("parse", what + ": expected an integer, got '" + text + "'");
  return v;
}

KvFile KvFile::parse_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str(), path);
}

KvFile KvFile::parse_string(const std::string &text,
                            const std::string &origin) {
  KvFile kv;
  kv.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw Error("parse", origin + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
    Entry e;
    e.key = trim(t.substr(0, eq));
    e.value = trim(t.substr(eq + 1));
    e.line = lineno;
    if (e.key.empty())
      throw Error("parse",
                  origin + ":" + std::to_string(lineno) + ": empty key");
    kv.entries_.push_back(std::move(e));
  }
  return kv;
}

bool KvFile::has(const std::string &key) const { return find(key) != nullptr; }

const KvFile::Entry *KvFile::find(const std::string &key) const {
  for (const Entry &e : entries_)
    if (e.key == key) return &e;
  return nullptr;
}

std::vector<std::string> KvFile::get_all(const std::string &key) const {
  std::vector<std::string> out;
  for (const Entry &e : entries_)
    if (e.key == key) out.push_back(e.value);
  return out;
}

std::string KvFile::get_string(const std::string &key) const {
  const Entry *e = find(key);
  if (!e) throw Error("config", origin_ + ": missing required key '" + key + "'");
  return e->value;
}

std::string KvFile::get_string_or(const std::string &key,
                                  const std::string &fallback) const {
  const Entry *e = find(key);
  return e ? e->value : fallback;
}

double KvFile::get_double_or(const std::string &key, double fallback) const {
  const Entry *e = find(key);
  if (!e) return fallback;
  return parse_double(e->value, origin_ + ": key '" + key + "'");
}

std::int64_t KvFile::get_int_or(const std::string &key,
                                std::int64_t fallback) const {
  const Entry *e = find(key);
  if (!e) return fallback;
  return parse_int(e->value, origin_ + ": key '" + key + "'");
}

std::uint64_t KvFile::get_uint_or(const std::string &key,
                                  std::uint64_t fallback) const {
  const Entry *e = find(key);
  if (!e) return fallback;
  std::int64_t v = parse_int(e->value, origin_ + ": key '" + key + "'");
  if (v < 0)
    throw Error("config",
                origin_ + ": key '" + key + "' must be non-negative");
  return static_cast<std::uint64_t>(v);
}

bool KvFile::get_bool_or(const std::string &key, bool fallback) const {
  const Entry *e = find(key);
  if (!e) return fallback;
  if (e->value == "true" || e->value == "1" || e->value == "yes") return true;
  if (e->value == "false" || e->value == "0" || e->value == "no") return false;
  throw Error("config", origin_ + ": key '" + key + "' must be a boolean, got '" +
                            e->value + "'");
}

std::vector<double> KvFile::get_doubles(const std::string &key) const {
  const Entry *e = find(key);
  if (!e) throw Error("config", origin_ + ": missing required key '" + key + "'");
  std::vector<double> out;
  std::istringstream ss(e->value);
  std::string tok;
  while (ss >> tok)
    out.push_back(parse_double(tok, origin_ + ": key '" + key + "'"));
  if (out.empty())
    throw Error("config", origin_ + ": key '" + key + "' has no values");
  return out;
}

}  // namespace melfew
