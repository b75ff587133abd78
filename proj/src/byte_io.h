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

// Little-endian encode/decode helpers for the binary file formats.

#ifndef OPORP_SRC_BYTE_IO_H_
#define OPORP_SRC_BYTE_IO_H_

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "oporp/error.h"

namespace oporp::byte_io {

inline void PutU64(std::ostream& out, std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf, 8);
}

inline void PutU32(std::ostream& out, std::uint32_t v) {
  char buf[4];
  for (int i = 0; i < 4; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf, 4);
}

inline void PutU8(std::ostream& out, std::uint8_t v) {
  out.put(static_cast<char>(v));
}

inline void PutF64(std::ostream& out, double v) {
  PutU64(out, std::bit_cast<std::uint64_t>(v));
}

inline void ReadExact(std::istream& in, char* buf, std::size_t n) {
  in.read(buf, static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) {
    throw Error(ErrorCode::kParse, "unexpected end of file");
  }
}

inline std::uint64_t GetU64(std::istream& in) {
  unsigned char buf[8];
  ReadExact(in, reinterpret_cast<char*>(buf), 8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | buf[i];
  return v;
}

inline std::uint32_t GetU32(std::istream& in) {
  unsigned char buf[4];
  ReadExact(in, reinterpret_cast<char*>(buf), 4);
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | buf[i];
  return v;
}

inline std::uint8_t GetU8(std::istream& in) {
  char c;
  ReadExact(in, &c, 1);
  return static_cast<std::uint8_t>(c);
}

inline double GetF64(std::istream& in) {
  return std::bit_cast<double>(GetU64(in));
}

}  // namespace oporp::byte_io

#endif  // OPORP_SRC_BYTE_IO_H_
