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

#ifndef PARLAPOL_STATS_H_
#define PARLAPOL_STATS_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace parlapol {

struct KsResult {
  double d = 0.0;        // sup |ECDF_x - ECDF_y| over the pooled sample
  double p_value = 1.0;  // asymptotic two-sided, Stephens-corrected
  size_t n1 = 0;
  size_t n2 = 0;
};

struct CorrResult {
  double rho = 0.0;
  double p_value = 1.0;  // two-sided via Student t with n-2 df
  size_t n = 0;
};

// Quantile grid 0.05, 0.10, ..., 0.95 by linear interpolation on order
// statistics (index p*(n-1)).
struct Descriptive {
  size_t n = 0;
  double mean = 0.0;
  double median = 0.0;
  std::array<double, 19> quantiles{};
};

// Two-sample Kolmogorov-Smirnov test. Throws kEmptySample on an empty side.
KsResult ks_two_sample(std::span<const double> xs, std::span<const double> ys);

// Spearman rank correlation with average ranks for ties. Throws
// kValidation for n < 3 or mismatched lengths, kDegenerateRanks when either
// rank vector is constant. rho = +/-1 yields p = 0.
CorrResult spearman(std::span<const double> xs, std::span<const double> ys);

// Rank correlation coefficient alone (same tie handling); used where the
// p-value must be computed against a different effective n.
double spearman_rho(std::span<const double> xs, std::span<const double> ys);

// Average ranks (1-based) with ties sharing their mean rank.
std::vector<double> average_ranks(std::span<const double> xs);

Descriptive describe(std::span<const double> xs);

// Quantile by linear interpolation; `sorted` must be ascending, nonempty.
double quantile_sorted(std::span<const double> sorted, double p);

// Two-sided p from Student t via the regularized incomplete beta function.
double student_t_two_sided_p(double t, double df);

// Regularized incomplete beta I_x(a, b), relative tolerance 1e-10.
double incomplete_beta(double a, double b, double x);

// Significance stars: p<0.001 "***", p<0.01 "**", p<0.05 "*", else "ns".
std::string stars(double p);

}  // namespace parlapol

#endif  // PARLAPOL_STATS_H_
