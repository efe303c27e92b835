// Copyright 2026 The goalbench Authors
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

#include "goalbench/bench/curves.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <regex>
#include <sstream>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "goalbench/error.h"

namespace goalbench::bench {
namespace {

constexpr const char* kCurveHeader = "step,success_rate,mean_return,seed";

void WriteRow(std::ostream& out, const EvalRecord& r) {
  fmt::print(out, "{},{:.6f},{:.6f},{}\n", r.step, r.success_rate,
             r.mean_return, r.seed);
}

}  // namespace

void WriteCurveCsv(std::ostream& out, const std::vector<EvalRecord>& records) {
  out << kCurveHeader << '\n';
  for (const auto& r : records) WriteRow(out, r);
}

void WriteCurveCsv(const std::filesystem::path& path,
                   const std::vector<EvalRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  WriteCurveCsv(out, records);
}

std::vector<EvalRecord> ReadCurveCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kCurveHeader) {
    throw FormatError(path.string() + ": missing curve header");
  }
  std::vector<EvalRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream row(line);
    EvalRecord r;
    row >> r.step >> r.success_rate >> r.mean_return >> r.seed;
    if (row.fail()) {
      throw FormatError(fmt::format("{}:{}: malformed curve row",
                                    path.string(), line_no));
    }
    out.push_back(r);
  }
  return out;
}

CurveWriter::CurveWriter(const std::filesystem::path& path)
    : out_(path, std::ios::binary | std::ios::trunc) {
  if (!out_) throw FormatError("cannot write " + path.string());
  out_ << kCurveHeader << '\n';
  out_.flush();
}

void CurveWriter::Append(const EvalRecord& record) {
  WriteRow(out_, record);
  out_.flush();
}

double Median(std::vector<double> values) {
  if (values.empty()) throw ContractViolation("Median of an empty set");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2]
                    : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<AggregateRow> AggregateCurves(
    const std::vector<std::vector<EvalRecord>>& curves) {
  std::map<std::size_t, std::vector<double>> by_step;
  for (const auto& curve : curves) {
    for (const auto& r : curve) by_step[r.step].push_back(r.success_rate);
  }
  std::vector<AggregateRow> rows;
  rows.reserve(by_step.size());
  for (const auto& [step, values] : by_step) {
    AggregateRow row;
    row.step = step;
    row.n_seeds = values.size();
    row.median_success_rate = Median(values);
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= values.size();
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    row.std_success_rate = std::sqrt(var / values.size());
    row.min_success_rate = *std::min_element(values.begin(), values.end());
    row.max_success_rate = *std::max_element(values.begin(), values.end());
    rows.push_back(row);
  }
  return rows;
}

void WriteAggregateCsv(const std::filesystem::path& path,
                       const std::vector<AggregateRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << "step,median_success_rate,std_success_rate,min_success_rate,"
         "max_success_rate,n_seeds\n";
  for (const auto& r : rows) {
    fmt::print(out, "{},{:.6f},{:.6f},{:.6f},{:.6f},{}\n", r.step,
               r.median_success_rate, r.std_success_rate, r.min_success_rate,
               r.max_success_rate, r.n_seeds);
  }
}

std::vector<std::vector<EvalRecord>> ReadCurveDirectory(
    const std::filesystem::path& dir) {
  static const std::regex kName(R"(curve_seed(\d+)\.csv)");
  std::map<std::uint64_t, std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::smatch m;
    const std::string name = entry.path().filename().string();
    if (std::regex_match(name, m, kName)) {
      files[std::stoull(m[1].str())] = entry.path();
    }
  }
  if (files.empty()) {
    throw FormatError("no curve_seed<N>.csv files in " + dir.string());
  }
  std::vector<std::vector<EvalRecord>> out;
  for (const auto& [seed, path] : files) out.push_back(ReadCurveCsv(path));
  return out;
}

}  // namespace goalbench::bench
