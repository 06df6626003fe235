// euro/corpus/kaldi_dir.cc

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

#include "euro/corpus/kaldi_dir.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "euro/base/error.hpp"
#include "euro/base/io.hpp"

namespace euro::corpus {

namespace {

// One record per line: "key<SP>payload". Returns records in line order.
std::vector<std::pair<std::string, std::string>> parse_records(
    const std::string& path) {
  std::vector<std::pair<std::string, std::string>> records;
  std::unordered_set<std::string> seen;
  int lineno = 0;
  for (const auto& line : read_lines(path)) {
    ++lineno;
    if (strip(line).empty()) continue;
    size_t sp = line.find(' ');
    if (sp == std::string::npos || sp == 0)
      throw DataFormatError(path + ":" + std::to_string(lineno) +
                            ": expected 'key<SP>payload'");
    std::string key = line.substr(0, sp);
    std::string payload = strip(line.substr(sp + 1));
    if (payload.empty())
      throw DataFormatError(path + ":" + std::to_string(lineno) +
                            ": empty payload");
    if (!seen.insert(key).second)
      throw DataFormatError(path + ":" + std::to_string(lineno) +
                            ": duplicate utt_id '" + key + "'");
    records.emplace_back(std::move(key), std::move(payload));
  }
  return records;
}

}  // namespace

std::pair<std::string, std::string> parse_feature_ref(const std::string& ref) {
  size_t colon = ref.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == ref.size())
    throw DataFormatError("feature_ref must look like 'archive:key', got '" +
                          ref + "'");
  return {ref.substr(0, colon), ref.substr(colon + 1)};
}

KaldiDataDir load_kaldi_dir(const std::string& dir) {
  KaldiDataDir data;
  for (auto& [key, payload] : parse_records(dir + "/feats.scp")) {
    parse_feature_ref(payload);  // validate shape of the locator
    data.utterances.push_back({std::move(key), std::move(payload)});
  }
  std::sort(data.utterances.begin(), data.utterances.end(),
            [](const auto& a, const auto& b) { return a.utt_id < b.utt_id; });
  data.text = parse_records(dir + "/text");
  for (const auto& [key, payload] : data.text) data.text_by_id[key] = payload;
  return data;
}

void write_kaldi_dir(const KaldiDataDir& data, const std::string& dir) {
  make_dirs(dir);
  std::ostringstream scp;
  for (const auto& u : data.utterances)
    scp << u.utt_id << ' ' << u.feature_ref << '\n';
  write_file(dir + "/feats.scp", scp.str());
  std::ostringstream text;
  for (const auto& [key, payload] : data.text)
    text << key << ' ' << payload << '\n';
  write_file(dir + "/text", text.str());
}

}  // namespace euro::corpus
