// euro/corpus/text_store.hpp

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

#ifndef EURO_CORPUS_TEXT_STORE_HPP_
#define EURO_CORPUS_TEXT_STORE_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace euro::corpus {

/// Randomized loader over tokenized unpaired text. Batches are sampled
/// uniformly with replacement, so draw order is a pure function of the seed.
/// Single consumer; give each training replica its own distinctly seeded
/// store.
class UnpairedTextStore {
 public:
  /// max_id bounds the valid token ids (typically PhonemeTable::size()).
  UnpairedTextStore(std::vector<std::vector<int>> sequences, int max_id,
                    uint64_t seed);

  size_t size() const { return sequences_.size(); }
  const std::vector<std::vector<int>>& sequences() const { return sequences_; }

  std::vector<std::vector<int>> next_batch(int batch);

 private:
  std::vector<std::vector<int>> sequences_;
  std::mt19937_64 rng_;
};

}  // namespace euro::corpus

#endif  // EURO_CORPUS_TEXT_STORE_HPP_
