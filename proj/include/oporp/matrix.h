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

// Row-major dense matrices (one data vector per row) and their file formats.
//
// CSV: one vector per line, comma-separated decimals. Blank lines and lines
// starting with '#' are skipped.
//
// Binary (little-endian):
//   offset 0   char[4]  "OPMX"
//   offset 4   u32      version = 1
//   offset 8   u64      rows
//   offset 16  u64      cols
//   offset 24  f64      rows * cols values, row-major
//
// Labels: one integer per line.

#ifndef OPORP_MATRIX_H_
#define OPORP_MATRIX_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace oporp {

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  std::span<const double> Row(std::size_t i) const {
    return std::span<const double>(data).subspan(i * cols, cols);
  }
  std::span<double> Row(std::size_t i) {
    return std::span<double>(data).subspan(i * cols, cols);
  }
};

// Picks the format from the file contents (binary magic or CSV).
Matrix ReadMatrix(const std::string& path);
Matrix ReadMatrixCsv(const std::string& path);
Matrix ReadMatrixBinary(const std::string& path);
void WriteMatrixCsv(const std::string& path, const Matrix& m);
void WriteMatrixBinary(const std::string& path, const Matrix& m);

std::vector<int> ReadLabels(const std::string& path);
void WriteLabels(const std::string& path, const std::vector<int>& labels);

// Shortest decimal string that parses back to exactly `value`.
std::string FormatDouble(double value);

}  // namespace oporp

#endif  // OPORP_MATRIX_H_
