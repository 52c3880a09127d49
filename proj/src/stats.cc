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

#include "parlapol/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "parlapol/error.h"

namespace parlapol {

namespace {

// Kolmogorov asymptotic survival function Q(lambda) =
// 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2), truncated at j=100 with
// early exit once a term drops below 1e-12. The alternating series does
// not converge for lambda near 0; in that regime Q -> 1.
double kolmogorov_q(double lambda) {
  double sum = 0.0;
  double sign = 1.0;
  const double l2 = lambda * lambda;
  for (int j = 1; j <= 100; ++j) {
    const double term = 2.0 * std::exp(-2.0 * j * j * l2);
    sum += sign * term;
    sign = -sign;
    if (term < 1e-12) return std::clamp(sum, 0.0, 1.0);
  }
  return 1.0;
}

// Continued fraction for the incomplete beta function (Lentz's method).
double betacf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 1e-12;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

double pearson(std::span<const double> a, std::span<const double> b) {
  const size_t n = a.size();
  double ma = 0.0, mb = 0.0;
  for (size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double num = 0.0, va = 0.0, vb = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    num += da * db;
    va += da * da;
    vb += db * db;
  }
  if (va <= 0.0 || vb <= 0.0)
    throw Error(ErrorCode::kDegenerateRanks,
                "rank correlation undefined: zero rank variance");
  return num / std::sqrt(va * vb);
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) -
                          std::lgamma(b) + a * std::log(x) +
                          b * std::log(1.0 - x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * betacf(a, b, x) / a;
  }
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
  const double x = df / (df + t * t);
  return incomplete_beta(df / 2.0, 0.5, x);
}

KsResult ks_two_sample(std::span<const double> xs,
                       std::span<const double> ys) {
  if (xs.empty() || ys.empty())
    throw Error(ErrorCode::kEmptySample, "ks_two_sample: empty sample");
  std::vector<double> a(xs.begin(), xs.end());
  std::vector<double> b(ys.begin(), ys.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double t = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == t) ++i;
    while (j < b.size() && b[j] == t) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / n1 -
                              static_cast<double>(j) / n2));
  }
  const double ne = n1 * n2 / (n1 + n2);
  const double sqrt_ne = std::sqrt(ne);
  const double lambda = (sqrt_ne + 0.12 + 0.11 / sqrt_ne) * d;
  KsResult r;
  r.d = d;
  r.p_value = kolmogorov_q(lambda);
  r.n1 = a.size();
  r.n2 = b.size();
  return r;
}

std::vector<double> average_ranks(std::span<const double> xs) {
  const size_t n = xs.size();
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](size_t a, size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && xs[idx[j + 1]] == xs[idx[i]]) ++j;
    const double r = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[idx[k]] = r;
    i = j + 1;
  }
  return ranks;
}

double spearman_rho(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw Error(ErrorCode::kValidation, "spearman: length mismatch");
  if (xs.size() < 3)
    throw Error(ErrorCode::kValidation, "spearman: need at least 3 pairs");
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  double rho = pearson(rx, ry);
  return std::clamp(rho, -1.0, 1.0);
}

CorrResult spearman(std::span<const double> xs, std::span<const double> ys) {
  CorrResult r;
  r.n = xs.size();
  r.rho = spearman_rho(xs, ys);
  const double n = static_cast<double>(r.n);
  if (std::fabs(r.rho) >= 1.0) {
    r.p_value = 0.0;
  } else {
    const double t = r.rho * std::sqrt((n - 2.0) / (1.0 - r.rho * r.rho));
    r.p_value = student_t_two_sided_p(t, n - 2.0);
  }
  return r;
}

double quantile_sorted(std::span<const double> sorted, double p) {
  const size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double h = p * static_cast<double>(n - 1);
  const size_t lo = static_cast<size_t>(h);
  if (lo + 1 >= n) return sorted[n - 1];
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

Descriptive describe(std::span<const double> xs) {
  if (xs.empty())
    throw Error(ErrorCode::kEmptySample, "describe: empty sample");
  Descriptive d;
  d.n = xs.size();
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (double v : sorted) sum += v;
  d.mean = sum / static_cast<double>(d.n);
  d.median = quantile_sorted(sorted, 0.5);
  for (int k = 0; k < 19; ++k) {
    d.quantiles[k] = quantile_sorted(sorted, 0.05 * (k + 1));
  }
  return d;
}

std::string stars(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "ns";
}

}  // namespace parlapol
