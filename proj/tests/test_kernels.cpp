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

#include <cmath>
#include <cstddef>
#include <vector>

#include "doctest.h"
#include "melfew/common/rng.hpp"
#include "melfew/kernels/kernels.hpp"

using namespace melfew;
namespace k = melfew::kernels;

namespace {

std::vector<double> random_vec(std::size_t n, Rng *rng) {
  std::vector<double> v(n);
  for (double &x : v) x = rng->normal();
  return v;
}

bool close(double a, double b, double tol = 1e-12) {
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol * scale;
}

}  // namespace

TEST_CASE("scalar kernel oracles") {
  const auto &t = k::table_for(k::Backend::kScalar);

  std::vector<double> a{1, 2, 3}, b{4, 5, 6};
  CHECK(t.dot(a.data(), b.data(), 3) == 32.0);
  CHECK(t.sumsq_diff(a.data(), b.data(), 3) == 27.0);

  std::vector<double> y{1, 2};
  std::vector<double> x{1, 1};
  t.axpy(2.0, x.data(), y.data(), 2);
  CHECK(y == std::vector<double>{3, 4});

  // 2x3 matrix times 3-vector plus bias.
  std::vector<double> m{1, 0, 2, 0, 3, 0};
  std::vector<double> v{1, 2, 3}, bias{10, 20}, out(2);
  t.matvec(m.data(), 2, 3, v.data(), bias.data(), out.data());
  CHECK(out == std::vector<double>{17, 26});
  t.matvec(m.data(), 2, 3, v.data(), nullptr, out.data());
  CHECK(out == std::vector<double>{7, 6});

  // A^T x with the same 2x3 matrix and a 2-vector.
  std::vector<double> x2{1, 1}, out3(3);
  t.matvec_t(m.data(), 2, 3, x2.data(), out3.data());
  CHECK(out3 == std::vector<double>{1, 3, 2});

  std::vector<double> acc(4, 0.0);
  std::vector<double> r{1, 2}, c{3, 4};
  t.rank1_update(2.0, r.data(), 2, c.data(), 2, acc.data());
  CHECK(acc == std::vector<double>{6, 8, 12, 16});
}

TEST_CASE("scalar adam_update matches the hand formula") {
  const auto &t = k::table_for(k::Backend::kScalar);
  double w = 1.0, m = 0.0, v = 0.0, g = 0.5;
  const double lr = 0.1, b1 = 0.9, b2 = 0.999, eps = 1e-8;
  t.adam_update(&w, &m, &v, &g, 1, lr, b1, b2, eps, 1.0 - b1, 1.0 - b2);
  const double m_ref = (1 - b1) * g, v_ref = (1 - b2) * g * g;
  const double mhat = m_ref / (1 - b1), vhat = v_ref / (1 - b2);
  const double w_ref = 1.0 - lr * mhat / (std::sqrt(vhat) + eps);
  CHECK(close(w, w_ref));
  CHECK(close(m, m_ref));
  CHECK(close(v, v_ref));
}

TEST_CASE("vector backends agree with the scalar reference") {
  if (!k::backend_supported(k::Backend::kAvx2)) {
    MESSAGE("avx2 not supported on this host; skipping equivalence");
    return;
  }
  const auto &sc = k::table_for(k::Backend::kScalar);
  const auto &vx = k::table_for(k::Backend::kAvx2);
  Rng rng(2024);
  // Sizes straddle the vector width to cover the remainder loops.
  for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3},
                        std::size_t{4}, std::size_t{5}, std::size_t{7},
                        std::size_t{8}, std::size_t{13}, std::size_t{16},
                        std::size_t{17}, std::size_t{64}, std::size_t{100}}) {
    auto a = random_vec(n, &rng), b = random_vec(n, &rng);
    CHECK(close(sc.dot(a.data(), b.data(), n), vx.dot(a.data(), b.data(), n)));
    CHECK(close(sc.sumsq_diff(a.data(), b.data(), n),
                vx.sumsq_diff(a.data(), b.data(), n)));

    auto y1 = random_vec(n, &rng);
    auto y2 = y1;
    sc.axpy(0.37, a.data(), y1.data(), n);
    vx.axpy(0.37, a.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(close(y1[i], y2[i]));

    double w1 = 0.8, m1 = 0.1, v1 = 0.2;
    double w2 = w1, m2 = m1, v2 = v1;
    auto g = random_vec(1, &rng);
    sc.adam_update(&w1, &m1, &v1, g.data(), 1, 1e-3, 0.9, 0.999, 1e-8, 0.1,
                   0.001999);
    vx.adam_update(&w2, &m2, &v2, g.data(), 1, 1e-3, 0.9, 0.999, 1e-8, 0.1,
                   0.001999);
    CHECK(close(w1, w2));
    CHECK(close(m1, m2));
    CHECK(close(v1, v2));
  }

  for (auto [rows, cols] : {std::pair<std::size_t, std::size_t>{1, 1},
                            {3, 5},
                            {5, 3},
                            {16, 17},
                            {17, 16},
                            {32, 33}}) {
    auto m = random_vec(rows * cols, &rng);
    auto x = random_vec(cols, &rng);
    auto bias = random_vec(rows, &rng);
    std::vector<double> o1(rows), o2(rows);
    sc.matvec(m.data(), rows, cols, x.data(), bias.data(), o1.data());
    vx.matvec(m.data(), rows, cols, x.data(), bias.data(), o2.data());
    for (std::size_t i = 0; i < rows; ++i) CHECK(close(o1[i], o2[i]));

    auto xr = random_vec(rows, &rng);
    std::vector<double> t1(cols), t2(cols);
    sc.matvec_t(m.data(), rows, cols, xr.data(), t1.data());
    vx.matvec_t(m.data(), rows, cols, xr.data(), t2.data());
    for (std::size_t i = 0; i < cols; ++i) CHECK(close(t1[i], t2[i]));

    auto acc1 = random_vec(rows * cols, &rng);
    auto acc2 = acc1;
    sc.rank1_update(1.7, xr.data(), rows, x.data(), cols, acc1.data());
    vx.rank1_update(1.7, xr.data(), rows, x.data(), cols, acc2.data());
    for (std::size_t i = 0; i < rows * cols; ++i) CHECK(close(acc1[i], acc2[i]));
  }
}

TEST_CASE("backend selection is explicit and reversible") {
  const k::Backend before = k::active_backend();
  REQUIRE(k::set_backend(k::Backend::kScalar));
  CHECK(k::active_backend() == k::Backend::kScalar);
  std::vector<double> a{1, 2}, b{3, 4};
  CHECK(k::dot(a.data(), b.data(), 2) == 11.0);
  if (k::backend_supported(k::Backend::kAvx2)) {
    REQUIRE(k::set_backend(k::Backend::kAvx2));
    CHECK(k::active_backend() == k::Backend::kAvx2);
    CHECK(close(k::dot(a.data(), b.data(), 2), 11.0));
  }
  k::set_backend(before);
  CHECK(k::backend_name(k::Backend::kScalar) == std::string("scalar"));
  CHECK(k::backend_name(k::Backend::kAvx2) == std::string("avx2"));
}
