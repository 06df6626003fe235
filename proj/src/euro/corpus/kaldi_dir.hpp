// euro/corpus/kaldi_dir.hpp

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

#ifndef EURO_CORPUS_KALDI_DIR_HPP_
#define EURO_CORPUS_KALDI_DIR_HPP_

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace euro::corpus {

/// Kaldi-style data directory: a feats.scp manifest plus a text file. The
/// text is deliberately allowed to be unpaired with the utterances: its keys
/// need not match any utt_id.
struct KaldiDataDir {
  struct Utterance {
    std::string utt_id;
    std::string feature_ref;  // "<archive file>:<entry key>"
  };

  std::vector<Utterance> utterances;                 // sorted by utt_id
  std::vector<std::pair<std::string, std::string>> text;  // original line order
  std::unordered_map<std::string, std::string> text_by_id;

  bool has_text(const std::string& id) const { return text_by_id.count(id) > 0; }
};

/// Splits a feature_ref into (archive path relative to the dir, entry key).
std::pair<std::string, std::string> parse_feature_ref(const std::string& ref);

KaldiDataDir load_kaldi_dir(const std::string& dir);
void write_kaldi_dir(const KaldiDataDir& data, const std::string& dir);

}  // namespace euro::corpus

#endif  // EURO_CORPUS_KALDI_DIR_HPP_
