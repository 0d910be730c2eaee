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

#ifndef MELFEW_TESTS_TEST_UTIL_HPP_
#define MELFEW_TESTS_TEST_UTIL_HPP_

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "melfew/common/rng.hpp"
#include "melfew/data/types.hpp"
#include "melfew/metric/model.hpp"
#include "melfew/neural/net.hpp"

namespace melfew {
namespace testutil {

// Scratch directory removed on destruction.  Each instance gets a fresh
// path so tests can run in one process without clashing.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    const int id = counter.fetch_add(1);
    path_ = (std::filesystem::temp_directory_path() /
             ("melfew_test_" + std::to_string(::getpid()) + "_" +
              std::to_string(id)))
                .string();
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::string &path() const { return path_; }
  std::string file(const std::string &name) const { return path_ + "/" + name; }

 private:
  std::string path_;
};

inline data::FeatureVector make_fv(std::string id, std::string speaker,
                                   data::Emotion emotion, Vector values,
                                   data::DomainRole domain =
                                       data::DomainRole::kSource) {
  data::FeatureVector fv;
  fv.utterance_id = std::move(id);
  fv.speaker_id = std::move(speaker);
  fv.emotion = emotion;
  fv.domain = domain;
  fv.values = std::move(values);
  return fv;
}

// speakers x emotions x clips grid with Gaussian clusters around the given
// per-emotion means.  Ids are "<name>_s<sp>_e<em>_<clip>".
inline data::Dataset make_cluster_dataset(
    const std::string &name, data::DomainRole role, std::size_t speakers,
    std::size_t clips, const std::vector<Vector> &means, double spread,
    std::uint64_t seed) {
  data::Dataset ds;
  ds.name = name;
  ds.role = role;
  Rng rng(seed);
  const std::size_t dim = means.front().size();
  for (std::size_t sp = 0; sp < speakers; ++sp) {
    for (std::size_t em = 0; em < data::kNumEmotions; ++em) {
      for (std::size_t c = 0; c < clips; ++c) {
        Vector v(dim);
        for (std::size_t d = 0; d < dim; ++d)
          v[d] = means[em][d] + spread * rng.normal();
        ds.samples.push_back(make_fv(
            name + "_s" + std::to_string(sp) + "_e" + std::to_string(em) +
                "_" + std::to_string(c),
            name + "_s" + std::to_string(sp),
            static_cast<data::Emotion>(em), std::move(v), role));
      }
    }
  }
  return ds;
}

// Three well-separated cluster means along distinct axes.
inline std::vector<Vector> axis_means(std::size_t dim, double scale) {
  std::vector<Vector> means(data::kNumEmotions, Vector(dim, 0.0));
  for (std::size_t em = 0; em < data::kNumEmotions; ++em)
    means[em][em % dim] = scale * (em + 1.0);
  return means;
}

// Single identity layer, W = I, b = 0: embeddings equal inputs, which makes
// pair distances exact and easy to stage.
inline metric::SiameseModel identity_model(std::size_t dim,
                                           metric::SiameseConfig cfg = {}) {
  metric::SiameseModel m;
  m.config = cfg;
  m.trunk = neural::DenseNet(
      {{dim, dim, neural::Activation::kIdentity}});
  for (std::size_t i = 0; i < dim; ++i) m.trunk.weight(0)(i, i) = 1.0;
  return m;
}

inline void zero_net(neural::DenseNet *net) {
  for (std::size_t l = 0; l < net->num_layers(); ++l) {
    for (double &w : net->weight(l).data) w = 0.0;
    for (double &b : net->bias(l)) b = 0.0;
  }
}

inline bool nets_equal(const neural::DenseNet &a, const neural::DenseNet &b) {
  if (a.num_layers() != b.num_layers()) return false;
  for (std::size_t l = 0; l < a.num_layers(); ++l) {
    if (a.weight(l).data != b.weight(l).data) return false;
    if (a.bias(l) != b.bias(l)) return false;
  }
  return true;
}

// Every trainable scalar of the net, layer by layer, weights before biases.
// flatten_gradients follows the same order so the two can be zipped.
inline std::vector<double *> net_params(neural::DenseNet *net) {
  std::vector<double *> out;
  for (std::size_t l = 0; l < net->num_layers(); ++l) {
    for (double &w : net->weight(l).data) out.push_back(&w);
    for (double &b : net->bias(l)) out.push_back(&b);
  }
  return out;
}

inline std::vector<double> flatten_gradients(const neural::Gradients &g) {
  std::vector<double> out;
  for (std::size_t l = 0; l < g.weights.size(); ++l) {
    out.insert(out.end(), g.weights[l].data.begin(), g.weights[l].data.end());
    out.insert(out.end(), g.biases[l].begin(), g.biases[l].end());
  }
  return out;
}

// Central difference of f with respect to *p.
template <typename F>
double central_difference(double *p, F &&f, double h = 1e-5) {
  const double orig = *p;
  *p = orig + h;
  const double up = f();
  *p = orig - h;
  const double down = f();
  *p = orig;
  return (up - down) / (2.0 * h);
}

// Relative error with both-near-zero treated as agreement: finite
// differences cannot resolve gradients far below the step size.
inline double gradient_rel_err(double analytic, double numeric) {
  const double scale = std::max(std::fabs(analytic), std::fabs(numeric));
  if (scale < 1e-6) return 0.0;
  return std::fabs(analytic - numeric) / scale;
}

// Max relative error between an analytic gradient vector and central
// differences of f over the given parameters.
template <typename F>
double max_gradient_rel_err(const std::vector<double *> &params,
                            const std::vector<double> &analytic, F &&f) {
  double worst = 0.0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double numeric = central_difference(params[i], f);
    worst = std::max(worst, gradient_rel_err(analytic[i], numeric));
  }
  return worst;
}

}  // namespace testutil
}  // namespace melfew

#endif  // MELFEW_TESTS_TEST_UTIL_HPP_
