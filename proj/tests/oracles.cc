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

#include "oracles.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace oracles {

double ks_d_brute(const std::vector<double>& xs,
                  const std::vector<double>& ys) {
  std::vector<double> pooled = xs;
  pooled.insert(pooled.end(), ys.begin(), ys.end());
  double d = 0.0;
  for (double t : pooled) {
    size_t cx = 0, cy = 0;
    for (double v : xs)
      if (v <= t) ++cx;
    for (double v : ys)
      if (v <= t) ++cy;
    const double fx = static_cast<double>(cx) / xs.size();
    const double fy = static_cast<double>(cy) / ys.size();
    d = std::max(d, std::fabs(fx - fy));
  }
  return d;
}

double ks_p_series(double d, size_t n1, size_t n2) {
  const double ne =
      static_cast<double>(n1) * n2 / (static_cast<double>(n1) + n2);
  const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
  double sum = 0.0;
  bool converged = false;
  for (int j = 1; j <= 100; ++j) {
    const double term =
        2.0 * std::pow(-1.0, j - 1) * std::exp(-2.0 * j * j * lambda * lambda);
    sum += term;
    if (std::fabs(term) < 1e-12) {
      converged = true;
      break;
    }
  }
  if (!converged) return 1.0;
  return std::min(1.0, std::max(0.0, sum));
}

double spearman_rho_definitional(const std::vector<double>& xs,
                                 const std::vector<double>& ys) {
  const size_t n = xs.size();
  auto ranks = [n](const std::vector<double>& v) {
    std::vector<double> r(n);
    for (size_t i = 0; i < n; ++i) {
      size_t smaller = 0, equal = 0;
      for (size_t j = 0; j < n; ++j) {
        if (v[j] < v[i]) ++smaller;
        if (v[j] == v[i]) ++equal;
      }
      r[i] = 1.0 + smaller + (equal - 1) / 2.0;
    }
    return r;
  };
  const auto rx = ranks(xs);
  const auto ry = ranks(ys);
  double sx = 0, sy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += rx[i];
    sy += ry[i];
  }
  const double mx = sx / n, my = sy / n;
  double num = 0, vx = 0, vy = 0;
  for (size_t i = 0; i < n; ++i) {
    num += (rx[i] - mx) * (ry[i] - my);
    vx += (rx[i] - mx) * (rx[i] - mx);
    vy += (ry[i] - my) * (ry[i] - my);
  }
  return num / std::sqrt(vx * vy);
}

int edit_distance_full_table(const std::string& a, const std::string& b) {
  const size_t m = a.size(), n = b.size();
  std::vector<std::vector<int>> dp(m + 1, std::vector<int>(n + 1, 0));
  for (size_t i = 0; i <= m; ++i) dp[i][0] = static_cast<int>(i);
  for (size_t j = 0; j <= n; ++j) dp[0][j] = static_cast<int>(j);
  for (size_t i = 1; i <= m; ++i) {
    for (size_t j = 1; j <= n; ++j) {
      const int sub = dp[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 2);
      dp[i][j] = std::min(std::min(dp[i - 1][j] + 1, dp[i][j - 1] + 1), sub);
    }
  }
  return dp[m][n];
}

int similarity_ratio_straightline(const std::string& a, const std::string& b) {
  const double total = static_cast<double>(a.size() + b.size());
  if (total == 0) return 100;
  const int dist = edit_distance_full_table(a, b);
  return static_cast<int>(std::floor(100.0 * (total - dist) / total + 0.5));
}

namespace {

std::set<std::string> ascii_token_set(const std::string& s) {
  std::set<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!cur.empty()) {
      out.insert(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.insert(cur);
  return out;
}

std::string join(const std::set<std::string>& toks) {
  std::string out;
  for (const auto& t : toks) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

}  // namespace

int token_set_ratio_straightline(const std::string& a, const std::string& b) {
  const auto sa = ascii_token_set(a);
  const auto sb = ascii_token_set(b);
  if (sa == sb) return 100;
  std::set<std::string> inter, da, db;
  for (const auto& t : sa) {
    if (sb.count(t))
      inter.insert(t);
    else
      da.insert(t);
  }
  for (const auto& t : sb) {
    if (!sa.count(t)) db.insert(t);
  }
  const std::string i = join(inter);
  std::string x = i, y = i;
  if (!da.empty()) x = i.empty() ? join(da) : i + " " + join(da);
  if (!db.empty()) y = i.empty() ? join(db) : i + " " + join(db);
  int best = similarity_ratio_straightline(x, y);
  if (x != i) best = std::max(best, similarity_ratio_straightline(i, x));
  if (y != i) best = std::max(best, similarity_ratio_straightline(i, y));
  return best;
}

double quantile_sort_based(std::vector<double> xs, double p) {
  std::sort(xs.begin(), xs.end());
  const size_t n = xs.size();
  if (n == 1) return xs[0];
  const double h = p * static_cast<double>(n - 1);
  const auto lo = static_cast<size_t>(std::floor(h));
  if (lo + 1 >= n) return xs[n - 1];
  return xs[lo] + (h - lo) * (xs[lo + 1] - xs[lo]);
}

}  // namespace oracles
