// include/melfew/neural/checkpoint.hpp

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

#ifndef MELFEW_NEURAL_CHECKPOINT_HPP_
#define MELFEW_NEURAL_CHECKPOINT_HPP_

#include <iosfwd>
#include <string>

#include "melfew/neural/net.hpp"

namespace melfew {
namespace neural {

// Versioned textual checkpoint.  Weights are written as C hexfloats ("%a"),
// which round-trip doubles bit-exactly.
void save_net(const DenseNet &net, std::ostream &out);
void save_net(const DenseNet &net, const std::string &path);
DenseNet load_net(std::istream &in);
DenseNet load_net(const std::string &path);

// Internal helpers shared with the metric-model checkpoint.
std::string format_hex_double(double v);
double parse_hex_double(const std::string &token, const std::string &what);

}  // namespace neural
}  // namespace melfew

#endif  // MELFEW_NEURAL_CHECKPOINT_HPP_
