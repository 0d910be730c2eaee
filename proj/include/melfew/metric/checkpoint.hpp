// include/melfew/metric/checkpoint.hpp

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

#ifndef MELFEW_METRIC_CHECKPOINT_HPP_
#define MELFEW_METRIC_CHECKPOINT_HPP_

#include <iosfwd>
#include <string>

#include "melfew/metric/model.hpp"

namespace melfew {
namespace metric {

// Net checkpoint format plus a metadata block (kappa, margin, objective,
// distance); round-trips bit-exactly like the plain net checkpoint.
void save_siamese(const SiameseModel &model, std::ostream &out);
void save_siamese(const SiameseModel &model, const std::string &path);
SiameseModel load_siamese(std::istream &in);
SiameseModel load_siamese(const std::string &path);

}  // namespace metric
}  // namespace melfew

#endif  // MELFEW_METRIC_CHECKPOINT_HPP_
