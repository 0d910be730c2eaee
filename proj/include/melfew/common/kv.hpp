// include/melfew/common/kv.hpp

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

#ifndef MELFEW_COMMON_KV_HPP_
#define MELFEW_COMMON_KV_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace melfew {

// Plain-text "key = value" config file.  Blank lines and '#' comments are
// skipped; repeated keys are kept in order (used for e.g. multiple sources).
class KvFile {
 public:
  struct Entry {
    std::string key;
    std::string value;
    int line = 0;
  };

  static KvFile parse_file(const std::string &path);
  static KvFile parse_string(const std::string &text,
                             const std::string &origin);

  const std::string &origin() const { return origin_; }
  const std::vector<Entry> &entries() const { return entries_; }

  bool has(const std::string &key) const;
  // First occurrence, or nullptr.
  const Entry *find(const std::string &key) const;
  std::vector<std::string> get_all(const std::string &key) const;

  std::string get_string(const std::string &key) const;  // throws if absent
  std::string get_string_or(const std::string &key,
                            const std::string &fallback) const;
  double get_double_or(const std::string &key, double fallback) const;
  std::int64_t get_int_or(const std::string &key, std::int64_t fallback) const;
  std::uint64_t get_uint_or(const std::string &key,
                            std::uint64_t fallback) const;
  bool get_bool_or(const std::string &key, bool fallback) const;
  // Whitespace-separated list of doubles.
  std::vector<double> get_doubles(const std::string &key) const;

 private:
  std::string origin_;
  std::vector<Entry> entries_;
};

double parse_double(const std::string &text, const std::string &what);
std::int64_t parse_int(const std::string &text, const std::string &what);

}  // namespace melfew

#endif  // MELFEW_COMMON_KV_HPP_
