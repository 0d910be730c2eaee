// include/melfew/common/error.hpp

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

#ifndef MELFEW_COMMON_ERROR_HPP_
#define MELFEW_COMMON_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace melfew {

// Every failure the library raises carries a short machine-parsable category
// (e.g. "shape", "parse", "schema", "config", "usage", "protocol", "training",
// "sampling", "metric", "input", "key", "io").  The CLI prints it as
// "error[<category>]: <message>" and exits nonzero.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string &message)
      : std::runtime_error(message), category_(std::move(category)) {}

  const std::string &category() const noexcept { return category_; }

 private:
  std::string category_;
};

}  // namespace melfew

#endif  // MELFEW_COMMON_ERROR_HPP_
