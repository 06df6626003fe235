// euro/corpus/archive.hpp

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

#ifndef EURO_CORPUS_ARCHIVE_HPP_
#define EURO_CORPUS_ARCHIVE_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "euro/base/matrix.hpp"

namespace euro::corpus {

// Binary float32 matrix archive.
//
//   magic "EUROFA01" | u32 version | u32 dim | u64 count
//   count index records: u32 name_len | name | u64 offset | u32 n_frames
//   payload: row-major little-endian float32
//
// Version 1 is the feature archive: every entry shares the header dim and an
// index record carries only the frame count. Version 2 reuses the container
// for model checkpoints with named sections of heterogeneous shape; its
// header dim is 0 and each index record carries an extra u32 column count.
// Offsets are bytes from the start of the payload region.

struct ArchiveIndexEntry {
  std::string name;
  uint64_t offset = 0;
  uint32_t n_frames = 0;
  uint32_t cols = 0;
};

void write_archive(const std::string& path,
                   const std::vector<std::pair<std::string, Matrix>>& entries,
                   uint32_t version = 1);

class ArchiveReader {
 public:
  explicit ArchiveReader(const std::string& path);

  uint32_t version() const { return version_; }
  uint32_t dim() const { return dim_; }
  size_t count() const { return index_.size(); }
  bool contains(const std::string& name) const { return by_name_.count(name) > 0; }
  const std::vector<ArchiveIndexEntry>& index() const { return index_; }

  /// Reads one entry. NotFoundError for unknown names. Safe to call from
  /// several threads at once; each read opens its own stream.
  Matrix read(const std::string& name) const;

 private:
  std::string path_;
  uint32_t version_ = 0;
  uint32_t dim_ = 0;
  uint64_t payload_begin_ = 0;
  uint64_t payload_size_ = 0;
  std::vector<ArchiveIndexEntry> index_;
  std::unordered_map<std::string, size_t> by_name_;
};

}  // namespace euro::corpus

#endif  // EURO_CORPUS_ARCHIVE_HPP_
