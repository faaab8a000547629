// Copyright 2026 The chanreduce Authors.
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

#include "chanreduce/information.h"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "chanreduce/error.h"

namespace chanreduce {
namespace {

// b * g(a / b) with g(t) = t ln t - t + 1, i.e. a ln(a/b) - a + b. Summed over
// both letters the linear parts cancel, which leaves a sum of non-negative
// terms. Near a = b the series of g around 1 avoids cancellation.
double kl_term(double a, double b) {
  if (a == b) return 0.0;
  if (b == 0.0) return std::numeric_limits<double>::infinity();
  if (a == 0.0) return b;
  const double u = (a - b) / b;
  if (std::fabs(u) < 0.1) {
    // g(1+u) = sum_{k>=2} (-1)^k u^k / (k (k-1)), by Horner in u.
    static constexpr auto coeff = [] {
      std::array<double, 19> c{};
      for (int k = 2; k <= 18; ++k) c[k] = ((k % 2 == 0) ? 1.0 : -1.0) / (k * (k - 1.0));
      return c;
    }();
    double sum = coeff[18];
    for (int k = 17; k >= 2; --k) sum = sum * u + coeff[k];
    return b * (sum * u * u);
  }
  return a * std::log(a / b) - a + b;
}

}  // namespace

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ChannelError(ErrorCode::kOutOfRange, "binary_entropy argument outside [0,1]");
  }
  const double s = p <= 0.5 ? p : 1.0 - p;
  if (s == 0.0) return 0.0;
  return -s * std::log(s) - (1.0 - s) * std::log1p(-s);
}

double binary_kl(double p, double r) {
  if (!(p >= 0.0 && p <= 1.0 && r >= 0.0 && r <= 1.0)) {
    throw ChannelError(ErrorCode::kOutOfRange, "binary_kl argument outside [0,1]");
  }
  if (p == r) return 0.0;
  const double d = kl_term(p, r) + kl_term(1.0 - p, 1.0 - r);
  if (std::isinf(d)) {
    throw ChannelError(ErrorCode::kDivergenceInfinite, "binary_kl is infinite");
  }
  return d;
}

double mixing_gap(double w0, double p0, double w1, double p1, double center) {
  double gap = 0.0;
  if (w0 > 0.0 && p0 != center) gap += w0 * binary_kl(p0, center);
  if (w1 > 0.0 && p1 != center) gap += w1 * binary_kl(p1, center);
  return gap;
}

double entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

double mutual_information(std::span<const double> mass, int q, int n) {
  std::vector<double> px(q, 0.0);
  std::vector<double> py(n, 0.0);
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < n; ++y) {
      const double v = mass[static_cast<size_t>(x) * n + y];
      px[x] += v;
      py[y] += v;
    }
  }
  double info = 0.0;
  for (int x = 0; x < q; ++x) {
    if (px[x] <= 0.0) continue;
    for (int y = 0; y < n; ++y) {
      const double v = mass[static_cast<size_t>(x) * n + y];
      if (v > 0.0) info += v * std::log(v / (px[x] * py[y]));
    }
  }
  return info > 0.0 ? info : 0.0;
}

double mutual_information(const JointDistribution& joint) {
  return mutual_information(joint.mass(), joint.q(), joint.n());
}

EntropyTerms entropy_terms(const JointDistribution& joint) {
  const std::vector<double> px = joint.input_marginal();
  const std::vector<double> py = joint.output_marginal();
  EntropyTerms t{};
  t.h_x = entropy(px);
  t.h_y = entropy(py);
  t.h_xy = entropy(joint.mass());
  // Conditional entropies are averaged per conditioning symbol rather than
  // taken as differences, so the two routes to I(X;Y) are independent.
  for (int y = 0; y < joint.n(); ++y) {
    double hy = 0.0;
    for (int x = 0; x < joint.q(); ++x) {
      const double c = joint.at(x, y) / py[y];
      if (c > 0.0) hy -= c * std::log(c);
    }
    t.h_x_given_y += py[y] * hy;
  }
  for (int x = 0; x < joint.q(); ++x) {
    double hx = 0.0;
    for (int y = 0; y < joint.n(); ++y) {
      const double c = joint.at(x, y) / px[x];
      if (c > 0.0) hx -= c * std::log(c);
    }
    t.h_y_given_x += px[x] * hx;
  }
  return t;
}

}  // namespace chanreduce
