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
//
// Straight-line reference implementations used only by tests. These are
// written independently of the library code paths they check: quadratic
// scans instead of merge sweeps, full DP tables instead of rolling rows.

#ifndef PARLAPOL_TESTS_ORACLES_H_
#define PARLAPOL_TESTS_ORACLES_H_

#include <string>
#include <vector>

namespace oracles {

// KS D statistic by evaluating both ECDFs at every pooled sample point
// with full counting scans.
double ks_d_brute(const std::vector<double>& xs, const std::vector<double>& ys);

// Asymptotic KS p: lambda = (sqrt(ne)+0.12+0.11/sqrt(ne))*D, direct series.
double ks_p_series(double d, size_t n1, size_t n2);

// Spearman rho: average ranks assigned by explicit counting (for each
// element: 1 + #smaller + (#equal-1)/2), then the textbook Pearson formula.
double spearman_rho_definitional(const std::vector<double>& xs,
                                 const std::vector<double>& ys);

// Full-table weighted edit distance (substitution 2, indel 1) over bytes.
int edit_distance_full_table(const std::string& a, const std::string& b);

// round(100*(|a|+|b|-L)/(|a|+|b|)), 100 for two empty strings.
int similarity_ratio_straightline(const std::string& a, const std::string& b);

// Token set ratio per its definition, from ASCII input: lowercase, split
// on non-alpha, build I/X/Y, max ratio over non-identical pairs.
int token_set_ratio_straightline(const std::string& a, const std::string& b);

// Sort-based quantile with linear interpolation at index p*(n-1).
double quantile_sort_based(std::vector<double> xs, double p);

}  // namespace oracles

#endif  // PARLAPOL_TESTS_ORACLES_H_
