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

#include "chanreduce/channel_io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chanreduce/error.h"

namespace chanreduce {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ChannelError(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

JointDistribution parse_channel_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ChannelError(ErrorCode::kParse, std::string("channel JSON: ") + e.what());
  }
  int q = 0;
  std::vector<std::string> labels;
  std::vector<double> mass;
  try {
    q = doc.at("q").get<int>();
    const auto& rows = doc.at("pxy");
    if (!rows.is_array() || static_cast<int>(rows.size()) != q) {
      throw ChannelError(ErrorCode::kParse, "channel JSON: pxy must have q rows");
    }
    const size_t n = rows.empty() ? 0 : rows[0].size();
    if (doc.contains("labels")) {
      labels = doc["labels"].get<std::vector<std::string>>();
    } else {
      for (size_t y = 0; y < n; ++y) labels.push_back(std::to_string(y + 1));
    }
    if (labels.size() != n) {
      throw ChannelError(ErrorCode::kParse, "channel JSON: label count differs from columns");
    }
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) {
        throw ChannelError(ErrorCode::kParse, "channel JSON: ragged pxy");
      }
      for (const auto& v : row) mass.push_back(v.get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ChannelError(ErrorCode::kParse, std::string("channel JSON: ") + e.what());
  }
  return JointDistribution::from_mass(q, std::move(labels), std::move(mass));
}

JointDistribution read_channel_json(const std::string& path) {
  return parse_channel_json(read_file(path));
}

std::string channel_json(const JointDistribution& joint) {
  nlohmann::json doc;
  doc["q"] = joint.q();
  doc["labels"] = joint.labels();
  auto rows = nlohmann::json::array();
  for (int x = 0; x < joint.q(); ++x) {
    const auto r = joint.row(x);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  doc["pxy"] = std::move(rows);
  return doc.dump() + "\n";
}

std::string joint_csv(const JointDistribution& joint) {
  std::string out = "x,y,p\n";
  for (int x = 0; x < joint.q(); ++x) {
    for (int y = 0; y < joint.n(); ++y) {
      const double p = joint.at(x, y);
      if (p > 0.0) {
        out += std::to_string(x + 1) + "," + joint.labels()[y] + "," + format_double(p) + "\n";
      }
    }
  }
  return out;
}

std::string binary_quantizer_csv(const std::vector<std::string>& labels,
                                 const std::vector<int>& quantizer) {
  std::string out = "y,z\n";
  for (size_t y = 0; y < labels.size(); ++y) {
    out += labels[y] + "," + std::to_string(quantizer[y] + 1) + "\n";
  }
  return out;
}

std::string onehot_quantizer_csv(const std::vector<std::string>& labels,
                                 const std::vector<std::vector<int>>& tuples,
                                 const std::vector<int>& quantizer) {
  const size_t d = tuples.empty() ? 0 : tuples[0].size();
  std::string out = "y";
  for (size_t i = 0; i < d; ++i) out += ",z" + std::to_string(i + 1);
  out += ",z_id\n";
  for (size_t y = 0; y < labels.size(); ++y) {
    out += labels[y];
    for (int c : tuples[quantizer[y]]) out += "," + std::to_string(c + 1);
    out += "," + std::to_string(quantizer[y] + 1) + "\n";
  }
  return out;
}

}  // namespace chanreduce
