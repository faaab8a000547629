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

#ifndef CHANREDUCE_INFORMATION_H_
#define CHANREDUCE_INFORMATION_H_

#include <span>

#include "chanreduce/joint_distribution.h"

// Entropy and mutual-information primitives. All quantities are in nats;
// 0 log 0 is taken as 0 throughout.
namespace chanreduce {

inline constexpr double kLn2 = 0.69314718055994530942;

inline double nats_to_bits(double nats) { return nats / kLn2; }

// h2(p) = -p ln p - (1-p) ln(1-p). Evaluated through min(p, 1-p), so
// binary_entropy(p) and binary_entropy(1-p) agree bit for bit whenever 1-p is
// exactly representable. Throws kOutOfRange outside [0, 1].
double binary_entropy(double p);

// d2(p || r). Throws kDivergenceInfinite when p puts mass where r has none.
double binary_kl(double p, double r);

// w0 * d2(p0 || center) + w1 * d2(p1 || center).
//
// With center = (w0 p0 + w1 p1) / (w0 + w1) this equals
// (w0 + w1) h2(center) - w0 h2(p0) - w1 h2(p1), the loss of merging two
// posterior classes, but it is computed without the cancellation of the
// entropy form and is never negative.
double mixing_gap(double w0, double p0, double w1, double p1, double center);

double entropy(std::span<const double> probs);

// I(X;Y) for a row-major q x n table that sums to one. Zero rows or columns
// are allowed. Clamped at zero.
double mutual_information(std::span<const double> mass, int q, int n);
double mutual_information(const JointDistribution& joint);

struct EntropyTerms {
  double h_x;
  double h_y;
  double h_xy;
  double h_x_given_y;
  double h_y_given_x;
};

EntropyTerms entropy_terms(const JointDistribution& joint);

}  // namespace chanreduce

#endif  // CHANREDUCE_INFORMATION_H_
