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

#include "chanreduce/channel_gen.h"

#include <charconv>
#include <cmath>
#include <vector>

#include "chanreduce/channel_io.h"
#include "chanreduce/error.h"

namespace chanreduce {
namespace {

uint64_t splitmix64(uint64_t& x) {
  uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

// C(M + q - 1, q - 1), saturating above the cap.
int64_t composition_count(int q, int M) {
  long double c = 1.0L;
  for (int i = 1; i < q; ++i) {
    c = c * (M + i) / i;
    if (c > static_cast<long double>(kHardGridCap) * 2) return kHardGridCap + 1;
  }
  return static_cast<int64_t>(std::llround(static_cast<double>(c)));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s, std::string_view what) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ChannelError(ErrorCode::kParse,
                       "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Xoshiro256::Xoshiro256(uint64_t seed) {
  for (auto& s : s_) s = splitmix64(seed);
}

uint64_t Xoshiro256::next() {
  const uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() {
  return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double Xoshiro256::exponential() { return -std::log(uniform()); }

JointDistribution hard_grid_channel(int q, int M) {
  if (q < 2 || M < q) {
    throw ChannelError(ErrorCode::kOutOfRange, "hard grid needs q >= 2 and M >= q");
  }
  const int64_t count = composition_count(q, M);
  if (count > kHardGridCap) {
    throw ChannelError(ErrorCode::kTooLarge, "hard grid has more than " +
                                                 std::to_string(kHardGridCap) + " outputs");
  }
  const size_t n = static_cast<size_t>(count);
  std::vector<double> mass(static_cast<size_t>(q) * n);
  std::vector<std::string> labels;
  labels.reserve(n);

  // Lexicographic walk: a[0..q-2] free, a[q-1] takes the remainder.
  std::vector<int> a(q, 0);
  a[q - 1] = M;
  const double scale = 1.0 / (static_cast<double>(n) * M);
  for (size_t y = 0; y < n; ++y) {
    std::string label;
    for (int x = 0; x < q; ++x) {
      mass[x * n + y] = a[x] * scale;
      if (x) label += '-';
      label += std::to_string(a[x]);
    }
    labels.push_back(std::move(label));
    if (y + 1 == n) break;
    // Advance: bump the last free coordinate that still has room.
    int i = q - 2;
    while (a[q - 1] == 0) {
      a[q - 1] += a[i];
      a[i] = 0;
      --i;
    }
    ++a[i];
    --a[q - 1];
  }
  return JointDistribution::from_mass(q, std::move(labels), std::move(mass));
}

JointDistribution random_channel(int q, int n, uint64_t seed) {
  if (q < 2 || n < 1) {
    throw ChannelError(ErrorCode::kOutOfRange, "random channel needs q >= 2 and n >= 1");
  }
  Xoshiro256 rng(seed);
  std::vector<double> mass(static_cast<size_t>(q) * n);
  std::vector<double> e(q);
  for (int y = 0; y < n; ++y) {
    double s = 0.0;
    for (int x = 0; x < q; ++x) s += (e[x] = rng.exponential());
    for (int x = 0; x < q; ++x) mass[static_cast<size_t>(x) * n + y] = e[x] / s / n;
  }
  std::vector<std::string> labels;
  for (int y = 0; y < n; ++y) labels.push_back(std::to_string(y + 1));
  return JointDistribution::from_mass(q, std::move(labels), std::move(mass));
}

JointDistribution named_channel(NamedChannel kind, int q) {
  if (q < 2) throw ChannelError(ErrorCode::kOutOfRange, "named channels need q >= 2");
  std::vector<double> input(q, 1.0 / q);
  std::vector<std::vector<double>> w;
  if (kind == NamedChannel::kNoiseless) {
    w.assign(q, std::vector<double>(q, 0.0));
    for (int x = 0; x < q; ++x) w[x][x] = 1.0;
  } else {
    w.assign(q, std::vector<double>(1, 1.0));
  }
  return make_joint(input, w);
}

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  GeneratorSpec s;
  const size_t colon = text.find(':');
  s.kind = std::string(text.substr(0, colon));
  if (s.kind == "custom-file") {
    if (colon == std::string_view::npos || colon + 1 == text.size()) {
      throw ChannelError(ErrorCode::kParse, "custom-file needs a path");
    }
    s.path = std::string(text.substr(colon + 1));
    return s;
  }
  const auto parts = split(text, ':');
  auto need = [&](size_t k) {
    if (parts.size() != k) {
      throw ChannelError(ErrorCode::kParse, "generator '" + std::string(text) + "' needs " +
                                                std::to_string(k - 1) + " fields");
    }
  };
  if (s.kind == "hard-grid") {
    need(3);
    s.param = parse_number<int64_t>(parts[2], "M");
  } else if (s.kind == "random") {
    need(4);
    s.param = parse_number<int64_t>(parts[2], "output count");
    s.seed = parse_number<uint64_t>(parts[3], "seed");
  } else if (s.kind == "noiseless" || s.kind == "useless") {
    need(2);
  } else {
    throw ChannelError(ErrorCode::kParse, "unknown generator kind '" + s.kind + "'");
  }
  s.q = parse_number<int>(parts[1], "q");
  return s;
}

std::string GeneratorSpec::to_string() const {
  if (kind == "custom-file") return kind + ":" + path;
  std::string out = kind + ":" + std::to_string(q);
  if (kind == "hard-grid") out += ":" + std::to_string(param);
  if (kind == "random") out += ":" + std::to_string(param) + ":" + std::to_string(seed);
  return out;
}

JointDistribution generate(const GeneratorSpec& spec) {
  if (spec.kind == "hard-grid") {
    if (spec.param > kHardGridCap) throw ChannelError(ErrorCode::kTooLarge, "M too large");
    return hard_grid_channel(spec.q, static_cast<int>(spec.param));
  }
  if (spec.kind == "random") {
    if (spec.param > kHardGridCap) throw ChannelError(ErrorCode::kTooLarge, "n too large");
    return random_channel(spec.q, static_cast<int>(spec.param), spec.seed);
  }
  if (spec.kind == "noiseless") return named_channel(NamedChannel::kNoiseless, spec.q);
  if (spec.kind == "useless") return named_channel(NamedChannel::kUseless, spec.q);
  if (spec.kind == "custom-file") return read_channel_json(spec.path);
  throw ChannelError(ErrorCode::kParse, "unknown generator kind '" + spec.kind + "'");
}

}  // namespace chanreduce
