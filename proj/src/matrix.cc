//
// Copyright 2026 The OPORP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "oporp/matrix.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <string_view>

#include "byte_io.h"
#include "oporp/error.h"

namespace oporp {
namespace {

constexpr char kMatrixMagic[4] = {'O', 'P', 'M', 'X'};
constexpr std::uint32_t kMatrixVersion = 1;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double ParseDouble(std::string_view field, const std::string& path,
                   std::size_t line_no) {
  field = Trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::kParse, path + ":" + std::to_string(line_no) +
                                       ": bad number '" + std::string(field) +
                                       "'");
  }
  return value;
}

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return in;
}

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  return out;
}

}  // namespace

std::string FormatDouble(double value) {
  std::array<char, 32> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), ptr);
}

Matrix ReadMatrix(const std::string& path) {
  std::ifstream in = OpenIn(path);
  char magic[4] = {};
  in.read(magic, 4);
  if (in.gcount() == 4 && std::equal(magic, magic + 4, kMatrixMagic)) {
    return ReadMatrixBinary(path);
  }
  return ReadMatrixCsv(path);
}

Matrix ReadMatrixCsv(const std::string& path) {
  std::ifstream in = OpenIn(path);
  Matrix m;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = view.find(',', start);
      const std::string_view field =
          view.substr(start, comma == std::string_view::npos ? view.npos
                                                             : comma - start);
      m.data.push_back(ParseDouble(field, path, line_no));
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (m.rows == 0) {
      m.cols = count;
    } else if (count != m.cols) {
      throw Error(ErrorCode::kParse, path + ":" + std::to_string(line_no) +
                                         ": expected " + std::to_string(m.cols) +
                                         " columns, got " +
                                         std::to_string(count));
    }
    ++m.rows;
  }
  return m;
}

Matrix ReadMatrixBinary(const std::string& path) {
  std::ifstream in = OpenIn(path);
  char magic[4];
  byte_io::ReadExact(in, magic, 4);
  if (!std::equal(magic, magic + 4, kMatrixMagic)) {
    throw Error(ErrorCode::kParse, path + ": not a binary matrix file");
  }
  if (byte_io::GetU32(in) != kMatrixVersion) {
    throw Error(ErrorCode::kParse, path + ": unsupported matrix version");
  }
  const std::uint64_t rows = byte_io::GetU64(in);
  const std::uint64_t cols = byte_io::GetU64(in);
  if (cols != 0 && rows > (std::uint64_t{1} << 40) / cols) {
    throw Error(ErrorCode::kParse, path + ": implausible matrix shape");
  }
  Matrix m(rows, cols);
  for (double& x : m.data) x = byte_io::GetF64(in);
  return m;
}

void WriteMatrixCsv(const std::string& path, const Matrix& m) {
  std::ofstream out = OpenOut(path);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j > 0) out << ',';
      out << FormatDouble(m.data[i * m.cols + j]);
    }
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
}

void WriteMatrixBinary(const std::string& path, const Matrix& m) {
  std::ofstream out = OpenOut(path);
  out.write(kMatrixMagic, 4);
  byte_io::PutU32(out, kMatrixVersion);
  byte_io::PutU64(out, m.rows);
  byte_io::PutU64(out, m.cols);
  for (double x : m.data) byte_io::PutF64(out, x);
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
}

std::vector<int> ReadLabels(const std::string& path) {
  std::ifstream in = OpenIn(path);
  std::vector<int> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(view.data(), view.data() + view.size(), value);
    if (ec != std::errc() || ptr != view.data() + view.size()) {
      throw Error(ErrorCode::kParse,
                  path + ":" + std::to_string(line_no) + ": bad label");
    }
    labels.push_back(value);
  }
  return labels;
}

void WriteLabels(const std::string& path, const std::vector<int>& labels) {
  std::ofstream out = OpenOut(path);
  for (int label : labels) out << label << '\n';
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
}

}  // namespace oporp
