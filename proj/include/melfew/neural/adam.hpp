// include/melfew/neural/adam.hpp

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

#ifndef MELFEW_NEURAL_ADAM_HPP_
#define MELFEW_NEURAL_ADAM_HPP_

#include <cstdint>

#include "melfew/neural/net.hpp"

namespace melfew {
namespace neural {

struct AdamConfig {
  double lr = 0.0005;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Bias-corrected Adam.  Moment buffers are owned here so one net can be
// trained in phases with fresh state per phase.
class AdamState {
 public:
  AdamState() = default;
  AdamState(const DenseNet &net, const AdamConfig &cfg);

  // One update from accumulated gradients.  A gradient of zero leaves the
  // weights unchanged; non-finite gradients throw Error("training") naming
  // the offending layer, before any weight is touched.
  void step(DenseNet *net, const Gradients &grads);

  std::uint64_t step_count() const { return steps_; }
  const AdamConfig &config() const { return cfg_; }

 private:
  AdamConfig cfg_;
  std::vector<Matrix> m_w_, v_w_;
  std::vector<Vector> m_b_, v_b_;
  std::uint64_t steps_ = 0;
};

}  // namespace neural
}  // namespace melfew

#endif  // MELFEW_NEURAL_ADAM_HPP_
