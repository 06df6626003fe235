// euro/corpus/archive.cc

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

#include "euro/corpus/archive.hpp"

#include <fstream>

#include "euro/base/error.hpp"
#include "euro/base/io.hpp"

namespace euro::corpus {

static constexpr char kMagic[8] = {'E', 'U', 'R', 'O', 'F', 'A', '0', '1'};

void write_archive(const std::string& path,
                   const std::vector<std::pair<std::string, Matrix>>& entries,
                   uint32_t version) {
  if (version != 1 && version != 2)
    throw ConfigError("unsupported archive version");
  uint32_t dim = 0;
  if (version == 1) {
    for (const auto& [name, m] : entries) {
      if (m.rows() < 1 || m.cols() < 1)
        throw DataFormatError("archive entry '" + name + "' is empty");
      if (dim == 0) dim = static_cast<uint32_t>(m.cols());
      if (static_cast<uint32_t>(m.cols()) != dim)
        throw DataFormatError("archive entries must share one dim; '" + name +
                              "' has " + std::to_string(m.cols()) +
                              " columns, expected " + std::to_string(dim));
    }
  }

  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot write " + path);
  os.write(kMagic, 8);
  write_u32(os, version);
  write_u32(os, version == 1 ? dim : 0);
  write_u64(os, entries.size());

  uint64_t offset = 0;
  for (const auto& [name, m] : entries) {
    write_u32(os, static_cast<uint32_t>(name.size()));
    os.write(name.data(), static_cast<std::streamsize>(name.size()));
    write_u64(os, offset);
    write_u32(os, static_cast<uint32_t>(m.rows()));
    if (version == 2) write_u32(os, static_cast<uint32_t>(m.cols()));
    offset += static_cast<uint64_t>(m.rows()) * m.cols() * 4;
  }
  for (const auto& [name, m] : entries) {
    (void)name;
    for (double v : m.data()) write_f32(os, static_cast<float>(v));
  }
  if (!os) throw Error("write failed for " + path);
}

ArchiveReader::ArchiveReader(const std::string& path) : path_(path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw NotFoundError("cannot open archive " + path);
  char magic[8];
  if (!is.read(magic, 8) || std::string(magic, 8) != std::string(kMagic, 8))
    throw CorruptArchiveError("bad magic in " + path);
  version_ = read_u32(is);
  if (version_ != 1 && version_ != 2)
    throw CorruptArchiveError("unsupported archive version in " + path);
  dim_ = read_u32(is);
  if (version_ == 1 && dim_ == 0)
    throw CorruptArchiveError("feature archive with dim 0: " + path);
  uint64_t count = read_u64(is);
  index_.reserve(count);
  for (uint64_t i = 0; i < count; ++i) {
    ArchiveIndexEntry e;
    uint32_t len = read_u32(is);
    e.name.resize(len);
    if (!is.read(e.name.data(), len))
      throw CorruptArchiveError("truncated index in " + path);
    e.offset = read_u64(is);
    e.n_frames = read_u32(is);
    e.cols = version_ == 2 ? read_u32(is) : dim_;
    if (e.n_frames < 1 || e.cols < 1)
      throw CorruptArchiveError("empty entry '" + e.name + "' in " + path);
    if (by_name_.count(e.name))
      throw CorruptArchiveError("duplicate entry '" + e.name + "' in " + path);
    by_name_[e.name] = index_.size();
    index_.push_back(std::move(e));
  }
  payload_begin_ = static_cast<uint64_t>(is.tellg());
  is.seekg(0, std::ios::end);
  payload_size_ = static_cast<uint64_t>(is.tellg()) - payload_begin_;
  for (const auto& e : index_) {
    uint64_t bytes = static_cast<uint64_t>(e.n_frames) * e.cols * 4;
    if (e.offset + bytes > payload_size_)
      throw CorruptArchiveError("entry '" + e.name +
                                "' points outside payload in " + path);
  }
}

Matrix ArchiveReader::read(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end())
    throw NotFoundError("no entry '" + name + "' in " + path_);
  const ArchiveIndexEntry& e = index_[it->second];
  std::ifstream is(path_, std::ios::binary);
  if (!is) throw NotFoundError("cannot open archive " + path_);
  is.seekg(static_cast<std::streamoff>(payload_begin_ + e.offset));
  Matrix m(static_cast<int>(e.n_frames), static_cast<int>(e.cols));
  for (double& v : m.data()) v = static_cast<double>(read_f32(is));
  return m;
}

}  // namespace euro::corpus
