// euro/corpus/text_store.cc

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

#include "euro/corpus/text_store.hpp"

#include "euro/base/error.hpp"

namespace euro::corpus {

UnpairedTextStore::UnpairedTextStore(std::vector<std::vector<int>> sequences,
                                     int max_id, uint64_t seed)
    : sequences_(std::move(sequences)), rng_(seed) {
  for (const auto& seq : sequences_) {
    if (seq.empty()) throw DataFormatError("empty sequence in text store");
    for (int id : seq)
      if (id < 1 || id > max_id)
        throw DataFormatError("token id " + std::to_string(id) +
                              " outside [1, " + std::to_string(max_id) + "]");
  }
}

std::vector<std::vector<int>> UnpairedTextStore::next_batch(int batch) {
  if (sequences_.empty()) throw EmptyCorpusError("text store is empty");
  if (batch < 1) throw ContractError("batch must be >= 1");
  std::uniform_int_distribution<size_t> pick(0, sequences_.size() - 1);
  std::vector<std::vector<int>> out;
  out.reserve(batch);
  for (int i = 0; i < batch; ++i) out.push_back(sequences_[pick(rng_)]);
  return out;
}

}  // namespace euro::corpus
