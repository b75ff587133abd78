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

#include <gtest/gtest.h>

#include <fstream>
#include <limits>
#include <sstream>

#include "oporp/error.h"
#include "oporp/estimate.h"
#include "oporp/matrix.h"
#include "oporp/sketch_io.h"
#include "test_util.h"

namespace oporp {
namespace {

using ::oporp::testing::GaussianVector;
using ::oporp::testing::TempDir;

SketchConfig Config(Scheme scheme, std::size_t m) {
  SketchConfig c;
  c.dim = 50;
  c.k = 10;
  c.scheme = scheme;
  c.dist = scheme == Scheme::kVsrp ? ProjectionDistribution::Sparse(3.0)
                                   : ProjectionDistribution::Gaussian();
  c.repetitions = m;
  c.seed = 0xDEADBEEFCAFEULL;
  return c;
}

TEST(SketchIoTest, HeaderLayout) {
  const Sketch x = MakeSketch(GaussianVector(50, 1), Config(Scheme::kFixedLength, 2));
  std::stringstream buf;
  EncodeSketch(buf, x, 0.5);
  const std::string bytes = buf.str();
  ASSERT_EQ(bytes.size(), 72u + 20 * 8);
  EXPECT_EQ(bytes.substr(0, 4), "OPSK");
  EXPECT_EQ(bytes[4], 1);
  EXPECT_EQ(bytes[8], 50);
  EXPECT_EQ(bytes[16], 10);
  EXPECT_EQ(bytes[24], 0);  // fixed
  EXPECT_EQ(bytes[25], 1);  // gaussian
  EXPECT_EQ(bytes[26], 0);  // float64
  EXPECT_EQ(bytes[27], 1);  // has norm
  EXPECT_EQ(bytes[40], 2);  // m
}

TEST(SketchIoTest, RoundTripReproducesEstimates) {
  TempDir dir("io");
  for (Scheme scheme :
       {Scheme::kFixedLength, Scheme::kVariableLength, Scheme::kVsrp}) {
    const std::size_t m = scheme == Scheme::kVsrp ? 1 : 3;
    const Sketch x = MakeSketch(GaussianVector(50, 1), Config(scheme, m));
    const Sketch y = MakeSketch(GaussianVector(50, 2), Config(scheme, m));
    WriteSketch(dir.File("x.sk"), x);
    WriteSketch(dir.File("y.sk"), y);
    const Sketch x2 = ReadSketch(dir.File("x.sk"));
    const Sketch y2 = ReadSketch(dir.File("y.sk"));
    EXPECT_EQ(x2.config, x.config);
    EXPECT_EQ(x2.values, x.values);
    EXPECT_EQ(x2.stored_norm, x.stored_norm);
    for (Estimator e : kAllEstimators) {
      if (UsesVsrpSketch(e) != (scheme == Scheme::kVsrp)) continue;
      EXPECT_EQ(Estimate(e, x, y).value, Estimate(e, x2, y2).value);
    }
  }
}

TEST(SketchIoTest, SignSketchRoundTrip) {
  TempDir dir("io");
  SignSketch s;
  s.config = Config(Scheme::kFixedLength, 1);
  s.config.dist = ProjectionDistribution::Rademacher();
  s.bits = {1, -1, -1, 1, 1, 1, -1, 1, -1, -1};
  WriteSignSketch(dir.File("s.sk"), s);
  const SignSketch back = ReadSignSketch(dir.File("s.sk"));
  EXPECT_EQ(back.bits, s.bits);
  EXPECT_EQ(back.config, s.config);
  EXPECT_THROW(ReadSketch(dir.File("s.sk")), Error);
}

TEST(SketchIoTest, NoiseSigmaIsStored) {
  std::stringstream buf;
  const Sketch x = MakeSketch(GaussianVector(50, 1), Config(Scheme::kFixedLength, 1));
  EncodeSketch(buf, x, 1.25);
  EXPECT_EQ(DecodeSketchFile(buf).noise_sigma, 1.25);
}

ErrorCode DecodeError(const std::string& bytes) {
  std::stringstream buf(bytes);
  try {
    DecodeSketchFile(buf);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kNumeric;
}

TEST(SketchIoTest, CorruptFilesAreParseErrors) {
  const Sketch x = MakeSketch(GaussianVector(50, 1), Config(Scheme::kFixedLength, 1));
  std::stringstream buf;
  EncodeSketch(buf, x);
  const std::string good = buf.str();

  std::string bad = good;
  bad[0] = 'X';
  EXPECT_EQ(DecodeError(bad), ErrorCode::kParse);
  EXPECT_EQ(DecodeError(good.substr(0, good.size() - 3)), ErrorCode::kParse);
  EXPECT_EQ(DecodeError(good + "x"), ErrorCode::kParse);
  bad = good;
  bad[24] = 9;  // scheme
  EXPECT_EQ(DecodeError(bad), ErrorCode::kParse);
  bad = good;
  bad[16] = 0;  // k = 0
  EXPECT_EQ(DecodeError(bad), ErrorCode::kParse);
  EXPECT_EQ(DecodeError(""), ErrorCode::kParse);
}

TEST(SketchIoTest, MissingFileIsIoError) {
  try {
    ReadSketch("/nonexistent/dir/x.sk");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(MatrixIoTest, CsvAndBinaryRoundTrip) {
  TempDir dir("mx");
  Matrix m(3, 4);
  for (std::size_t i = 0; i < m.data.size(); ++i) {
    m.data[i] = std::sin(static_cast<double>(i)) * 1e-3 + i;
  }
  m.data[5] = 0.1;
  m.data[6] = -std::numeric_limits<double>::denorm_min();
  WriteMatrixCsv(dir.File("m.csv"), m);
  WriteMatrixBinary(dir.File("m.bin"), m);
  for (const char* name : {"m.csv", "m.bin"}) {
    const Matrix back = ReadMatrix(dir.File(name));
    EXPECT_EQ(back.rows, 3u);
    EXPECT_EQ(back.cols, 4u);
    EXPECT_EQ(back.data, m.data);
  }
}

TEST(MatrixIoTest, CsvSkipsCommentsAndRejectsRaggedRows) {
  TempDir dir("mx");
  {
    std::ofstream out(dir.File("a.csv"));
    out << "# header\n1, 2,3\n\n+4,5e0,-6\r\n";
  }
  const Matrix m = ReadMatrixCsv(dir.File("a.csv"));
  EXPECT_EQ(m.rows, 2u);
  EXPECT_EQ(m.data, (std::vector<double>{1, 2, 3, 4, 5, -6}));
  {
    std::ofstream out(dir.File("b.csv"));
    out << "1,2,3\n4,5\n";
  }
  EXPECT_THROW(ReadMatrixCsv(dir.File("b.csv")), Error);
  {
    std::ofstream out(dir.File("c.csv"));
    out << "1,abc\n";
  }
  EXPECT_THROW(ReadMatrixCsv(dir.File("c.csv")), Error);
}

TEST(MatrixIoTest, LabelsRoundTrip) {
  TempDir dir("mx");
  WriteLabels(dir.File("l.txt"), {0, 2, -1, 7});
  EXPECT_EQ(ReadLabels(dir.File("l.txt")), (std::vector<int>{0, 2, -1, 7}));
}

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(1.0), "1");
  EXPECT_EQ(FormatDouble(-2.5e-300), "-2.5e-300");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(std::stod(FormatDouble(x)), x);
}

}  // namespace
}  // namespace oporp
