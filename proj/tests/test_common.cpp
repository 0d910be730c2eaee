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
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "melfew/common/error.hpp"
#include "melfew/common/kv.hpp"
#include "melfew/common/linalg.hpp"
#include "melfew/common/matrix.hpp"
#include "melfew/common/rng.hpp"
#include "test_util.hpp"

using namespace melfew;

TEST_CASE("error carries its category") {
  Error e("schema", "bad row");
  CHECK(e.category() == "schema");
  CHECK(std::string(e.what()) == "bad row");
}

TEST_CASE("rng is deterministic per seed") {
  Rng a(42), b(42), c(43);
  bool all_equal = true;
  bool any_diff = false;
  for (int i = 0; i < 100; ++i) {
    std::uint64_t x = a.raw();
    if (x != b.raw()) all_equal = false;
    if (x != c.raw()) any_diff = true;
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("rng uniform stays in [0, 1)") {
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("rng uniform_index covers the range and rejects n = 0") {
  Rng rng(11);
  std::set<std::size_t> seen;
  for (int i = 0; i < 1000; ++i) {
    std::size_t v = rng.uniform_index(5);
    CHECK(v < 5);
    seen.insert(v);
  }
  CHECK(seen.size() == 5);
  CHECK_THROWS_AS(rng.uniform_index(0), Error);
}

TEST_CASE("rng normal has roughly standard moments") {
  Rng rng(123);
  const int n = 20000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    double x = rng.normal();
    sum += x;
    sumsq += x * x;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(std::fabs(mean) < 0.05);
  CHECK(std::fabs(var - 1.0) < 0.05);
}

TEST_CASE("rng shuffle permutes and is seed-stable") {
  std::vector<int> v1{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<int> v2 = v1;
  Rng a(5), b(5);
  a.shuffle(&v1);
  b.shuffle(&v2);
  CHECK(v1 == v2);
  std::multiset<int> bag(v1.begin(), v1.end());
  CHECK(bag == std::multiset<int>({1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST_CASE("derive_seed depends on path order and content") {
  const std::uint64_t base = 99;
  CHECK(derive_seed(base, {1, 2}) != derive_seed(base, {2, 1}));
  CHECK(derive_seed(base, {1}) != derive_seed(base, {1, 0}));
  CHECK(derive_seed(base, {1, 2}) == derive_seed(base, {1, 2}));
  CHECK(derive_seed(base, {}) != derive_seed(base + 1, {}));
}

TEST_CASE("rng forks give distinct streams, same fork id coincides") {
  Rng root(31);
  Rng f1 = root.fork(1);
  Rng f2 = root.fork(2);
  Rng f1b = root.fork(1);
  CHECK(f1.raw() != f2.raw());
  Rng f1c = root.fork(1);
  CHECK(f1b.raw() == f1c.raw());
}

TEST_CASE("kv parses keys, comments, and repeated keys in order") {
  const std::string text =
      "# a comment\n"
      "method = mel_s\n"
      "\n"
      "source = a.csv\n"
      "source = b.csv   # trailing comment\n"
      "margin = inf\n";
  KvFile kv = KvFile::parse_string(text, "test.kv");
  CHECK(kv.get_string("method") == "mel_s");
  auto sources = kv.get_all("source");
  REQUIRE(sources.size() == 2);
  CHECK(sources[0] == "a.csv");
  CHECK(sources[1] == "b.csv");
  CHECK(kv.get_string_or("missing", "dflt") == "dflt");
  CHECK(kv.has("margin"));
  CHECK_FALSE(kv.has("nope"));
}

TEST_CASE("kv missing key and malformed lines raise config/parse errors") {
  KvFile kv = KvFile::parse_string("a = 1\n", "t.kv");
  try {
    kv.get_string("b");
    FAIL("expected Error");
  } catch (const Error &e) {
    CHECK(e.category() == "config");
  }
  try {
    KvFile::parse_string("just a bare line\n", "t.kv");
    FAIL("expected Error");
  } catch (const Error &e) {
    CHECK(e.category() == "parse");
    CHECK(std::string(e.what()).find("t.kv:1") != std::string::npos);
  }
}

TEST_CASE("kv numeric getters parse and reject trailing junk") {
  KvFile kv = KvFile::parse_string(
      "lr = 0.0005\nepochs = 250\nflag = true\nvec = 1 2.5 -3\nbad = 1.5x\n",
      "t.kv");
  CHECK(kv.get_double_or("lr", 0.0) == doctest::Approx(0.0005));
  CHECK(kv.get_int_or("epochs", 0) == 250);
  CHECK(kv.get_bool_or("flag", false));
  auto vec = kv.get_doubles("vec");
  REQUIRE(vec.size() == 3);
  CHECK(vec[1] == doctest::Approx(2.5));
  CHECK(vec[2] == doctest::Approx(-3.0));
  try {
    kv.get_double_or("bad", 0.0);
    FAIL("expected Error");
  } catch (const Error &e) {
    CHECK(e.category() == "parse");
  }
}

TEST_CASE("parse_double and parse_int demand full consumption") {
  CHECK(parse_double("2.5", "x") == doctest::Approx(2.5));
  CHECK(parse_int("-7", "x") == -7);
  CHECK_THROWS_AS(parse_double("", "x"), Error);
  CHECK_THROWS_AS(parse_double("1,5", "x"), Error);
  CHECK_THROWS_AS(parse_int("3.5", "x"), Error);
}

TEST_CASE("sym_eigen solves a known 2x2") {
  // [[2, 1], [1, 2]] has eigenvalues 3 and 1.
  Matrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 2;
  Vector ev;
  Matrix vecs;
  sym_eigen(a, &ev, &vecs);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-10));
  // Eigenvector of 3 is (1, 1)/sqrt(2) up to sign: columns are vectors.
  CHECK(std::fabs(vecs(0, 0)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
  CHECK(vecs(0, 0) == doctest::Approx(vecs(1, 0)).epsilon(1e-9));
}

TEST_CASE("sym_eigen reconstructs random symmetric matrices") {
  Rng rng(77);
  const std::size_t n = 16;
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double v = rng.normal();
      a(i, j) = v;
      a(j, i) = v;
    }
  Vector ev;
  Matrix vecs;
  sym_eigen(a, &ev, &vecs);
  REQUIRE(ev.size() == n);
  for (std::size_t i = 0; i + 1 < n; ++i) CHECK(ev[i] >= ev[i + 1]);
  // A = V diag(ev) V^T, and V^T V = I.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double recon = 0.0, gram = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        recon += vecs(i, k) * ev[k] * vecs(j, k);
        gram += vecs(k, i) * vecs(k, j);
      }
      CHECK(recon == doctest::Approx(a(i, j)).epsilon(1e-8).scale(1.0));
      CHECK(gram == doctest::Approx(i == j ? 1.0 : 0.0)
                        .epsilon(1e-9)
                        .scale(1.0));
    }
  }
}

TEST_CASE("sym_eigen rejects non-square input") {
  Matrix a(2, 3);
  Vector ev;
  Matrix vecs;
  try {
    sym_eigen(a, &ev, &vecs);
    FAIL("expected Error");
  } catch (const Error &e) {
    CHECK(e.category() == "shape");
  }
}
