// Copyright 2026 parlapol authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.h"
#include "parlapol/error.h"
#include "parlapol/stats.h"

using namespace parlapol;

namespace {

std::vector<double> random_sample(std::mt19937_64& rng, size_t n,
                                  bool gridded) {
  std::vector<double> out(n);
  for (auto& v : out) {
    const double u =
        static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
    // Gridded draws force ties.
    v = gridded ? std::floor(u * 8.0) / 8.0 : u;
  }
  return out;
}

}  // namespace

TEST_CASE("ks identical samples give D=0 p=1") {
  std::vector<double> xs = {1.0, 2.0, 2.0, 3.5};
  auto r = ks_two_sample(xs, xs);
  CHECK(r.d == 0.0);
  CHECK(r.p_value == 1.0);
}

TEST_CASE("ks disjoint supports give D=1") {
  std::vector<double> xs = {1, 2, 3};
  std::vector<double> ys = {4, 5, 6};
  auto r = ks_two_sample(xs, ys);
  CHECK(r.d == 1.0);
}

TEST_CASE("ks three-point example matches oracle") {
  std::vector<double> xs = {0.1, 0.4, 0.7};
  std::vector<double> ys = {0.2, 0.3, 0.9};
  auto r = ks_two_sample(xs, ys);
  const double d_expected = oracles::ks_d_brute(xs, ys);
  CHECK(r.d == doctest::Approx(d_expected).epsilon(1e-14));
  CHECK(r.d == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(r.p_value ==
        doctest::Approx(oracles::ks_p_series(r.d, 3, 3)).epsilon(1e-12));
  // Frozen from direct evaluation of the series.
  CHECK(r.p_value == doctest::Approx(0.9762126488644777).epsilon(1e-9));
}

TEST_CASE("ks rejects empty samples") {
  std::vector<double> xs = {1.0};
  std::vector<double> empty;
  CHECK_THROWS_AS(ks_two_sample(xs, empty), Error);
  CHECK_THROWS_AS(ks_two_sample(empty, xs), Error);
}

TEST_CASE("ks matches brute-force oracle on random instances") {
  std::mt19937_64 rng(20260810);
  for (int it = 0; it < 100; ++it) {
    const size_t n1 = 3 + rng() % 28;
    const size_t n2 = 3 + rng() % 28;
    const bool grid = (it % 2) == 0;
    auto xs = random_sample(rng, n1, grid);
    auto ys = random_sample(rng, n2, grid);
    auto r = ks_two_sample(xs, ys);
    CHECK(std::fabs(r.d - oracles::ks_d_brute(xs, ys)) <= 1e-12);
    CHECK(std::fabs(r.p_value - oracles::ks_p_series(r.d, n1, n2)) <= 1e-12);
  }
}

TEST_CASE("ks invariant under monotone transform and swap") {
  std::mt19937_64 rng(7);
  auto xs = random_sample(rng, 20, false);
  auto ys = random_sample(rng, 15, true);
  auto r = ks_two_sample(xs, ys);
  auto swapped = ks_two_sample(ys, xs);
  CHECK(r.d == swapped.d);
  CHECK(r.p_value == swapped.p_value);
  auto f = [](double v) { return std::exp(3.0 * v) - 2.0; };
  std::vector<double> fx, fy;
  for (double v : xs) fx.push_back(f(v));
  for (double v : ys) fy.push_back(f(v));
  auto rt = ks_two_sample(fx, fy);
  CHECK(rt.d == doctest::Approx(r.d).epsilon(1e-14));
}

TEST_CASE("spearman monotone vectors") {
  std::vector<double> xs = {1, 2, 3};
  SUBCASE("increasing") {
    std::vector<double> ys = {10, 20, 30};
    auto r = spearman(xs, ys);
    CHECK(r.rho == doctest::Approx(1.0));
    CHECK(r.p_value == 0.0);
  }
  SUBCASE("decreasing") {
    std::vector<double> ys = {3, 2, 1};
    auto r = spearman(xs, ys);
    CHECK(r.rho == doctest::Approx(-1.0));
    CHECK(r.p_value == 0.0);
  }
}

TEST_CASE("spearman tied example matches definitional oracle") {
  std::vector<double> xs = {1, 2, 2, 4};
  std::vector<double> ys = {1, 3, 2, 4};
  auto r = spearman(xs, ys);
  CHECK(r.rho ==
        doctest::Approx(oracles::spearman_rho_definitional(xs, ys))
            .epsilon(1e-14));
  // Frozen: rho = 3/sqrt(10), p from t=3*sqrt(2) with 2 df.
  CHECK(r.rho == doctest::Approx(0.9486832980505138).epsilon(1e-12));
  CHECK(r.p_value == doctest::Approx(0.05131670194948623).epsilon(1e-9));
}

TEST_CASE("spearman error paths") {
  std::vector<double> two = {1, 2};
  std::vector<double> two2 = {2, 3};
  CHECK_THROWS_AS(spearman(two, two2), Error);
  std::vector<double> constant = {5, 5, 5, 5};
  std::vector<double> varying = {1, 2, 3, 4};
  try {
    spearman(constant, varying);
    FAIL("expected DegenerateRanks");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateRanks);
  }
}

TEST_CASE("spearman matches oracle on random tied instances") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 100; ++it) {
    const size_t n = 3 + rng() % 28;
    auto xs = random_sample(rng, n, true);
    auto ys = random_sample(rng, n, true);
    double rho_impl;
    try {
      rho_impl = spearman_rho(xs, ys);
    } catch (const Error&) {
      continue;  // constant draw; oracle would divide by zero too
    }
    CHECK(std::fabs(rho_impl - oracles::spearman_rho_definitional(xs, ys)) <=
          1e-12);
  }
}

TEST_CASE("spearman invariances") {
  std::mt19937_64 rng(4242);
  auto xs = random_sample(rng, 25, true);
  auto ys = random_sample(rng, 25, false);
  const double rho = spearman_rho(xs, ys);
  // Strictly increasing transform of one side leaves rho unchanged.
  std::vector<double> ys2;
  for (double v : ys) ys2.push_back(std::atan(5.0 * v) + 7.0);
  CHECK(spearman_rho(xs, ys2) == doctest::Approx(rho).epsilon(1e-12));
  // Negating one side negates rho.
  std::vector<double> neg;
  for (double v : ys) neg.push_back(-v);
  CHECK(spearman_rho(xs, neg) == doctest::Approx(-rho).epsilon(1e-12));
}

TEST_CASE("descriptive medians and quantiles") {
  std::vector<double> odd = {3, 1, 2};
  CHECK(describe(odd).median == doctest::Approx(2.0));
  std::vector<double> even = {4, 1, 3, 2};
  CHECK(describe(even).median == doctest::Approx(2.5));

  std::mt19937_64 rng(11);
  auto xs = random_sample(rng, 100, false);
  auto d = describe(xs);
  for (int k = 0; k < 19; ++k) {
    const double p = 0.05 * (k + 1);
    CHECK(d.quantiles[k] == oracles::quantile_sort_based(xs, p));
  }
  CHECK(d.median == oracles::quantile_sort_based(xs, 0.5));
}

TEST_CASE("stars thresholds") {
  CHECK(stars(0.0005) == "***");
  CHECK(stars(0.005) == "**");
  CHECK(stars(0.03) == "*");
  CHECK(stars(0.2) == "ns");
  CHECK(stars(0.001) == "**");
  CHECK(stars(0.05) == "ns");
}

TEST_CASE("incomplete beta sanity") {
  // I_x(1, b) = 1 - (1-x)^b
  CHECK(incomplete_beta(1.0, 0.5, 0.1) ==
        doctest::Approx(1.0 - std::sqrt(0.9)).epsilon(1e-10));
  CHECK(incomplete_beta(2.5, 3.5, 0.0) == 0.0);
  CHECK(incomplete_beta(2.5, 3.5, 1.0) == 1.0);
  // Symmetry I_x(a,b) = 1 - I_{1-x}(b,a)
  const double v = incomplete_beta(2.0, 5.0, 0.3);
  CHECK(v == doctest::Approx(1.0 - incomplete_beta(5.0, 2.0, 0.7))
                 .epsilon(1e-10));
}
