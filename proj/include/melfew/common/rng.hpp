// include/melfew/common/rng.hpp

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

#ifndef MELFEW_COMMON_RNG_HPP_
#define MELFEW_COMMON_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "melfew/common/error.hpp"

namespace melfew {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Folds a path of stream ids into a base seed.  Deterministic, so every
// sub-experiment (source index, k, repetition, phase) gets a stable seed.
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = splitmix64(base);
  for (std::uint64_t p : path) s = splitmix64(s ^ splitmix64(p));
  return s;
}

// Deterministic RNG wrapper.  All randomness in the library flows through
// this class; std::distribution objects are avoided because their outputs
// are not pinned by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t raw() { return engine_(); }

  // Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform index in [0, n); unbiased via rejection.
  std::size_t uniform_index(std::size_t n) {
    if (n == 0) throw Error("usage", "uniform_index: n must be positive");
    const std::uint64_t nn = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % nn;
    std::uint64_t r;
    do {
      r = raw();
    } while (r >= limit);
    return static_cast<std::size_t>(r % nn);
  }

  // Standard normal via Box-Muller, uncached so the draw sequence is a pure
  // function of the engine state.
  double normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  // Child RNG for an independent stream.  Forks with the same id coincide,
  // so callers must use distinct stream ids.
  Rng fork(std::uint64_t stream) const {
    return Rng(derive_seed(seed_, {stream}));
  }

  template <typename T>
  void shuffle(std::vector<T> *v) {
    for (std::size_t i = v->size(); i > 1; --i) {
      std::size_t j = uniform_index(i);
      std::swap((*v)[i - 1], (*v)[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace melfew

#endif  // MELFEW_COMMON_RNG_HPP_
