// euro/base/io.hpp

// Copyright 2026  The euro-desk authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef EURO_BASE_IO_HPP_
#define EURO_BASE_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace euro {

/// Reads a whole UTF-8 text file into lines (newline-stripped).
/// Throws NotFoundError when the file does not exist.
std::vector<std::string> read_lines(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::string strip(const std::string& s);
std::vector<std::string> split_ws(const std::string& s);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

// Little-endian binary primitives. Streams must be opened in binary mode.
void write_u32(std::ostream& os, uint32_t v);
void write_u64(std::ostream& os, uint64_t v);
void write_f32(std::ostream& os, float v);
uint32_t read_u32(std::istream& is);
uint64_t read_u64(std::istream& is);
float read_f32(std::istream& is);

/// FNV-1a over bytes; used for stage input fingerprints.
uint64_t fnv1a(const std::string& bytes, uint64_t seed = 1469598103934665603ull);
uint64_t fnv1a_file(const std::string& path, uint64_t seed = 1469598103934665603ull);

bool file_exists(const std::string& path);
void make_dirs(const std::string& path);

}  // namespace euro

#endif  // EURO_BASE_IO_HPP_
