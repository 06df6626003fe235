// euro/corpus/synth.hpp

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

#ifndef EURO_CORPUS_SYNTH_HPP_
#define EURO_CORPUS_SYNTH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "euro/base/matrix.hpp"
#include "euro/corpus/phoneme_table.hpp"

namespace euro::corpus {

/// Controls the synthetic separable corpus. Each utterance is a random
/// phoneme string (length 4..12, no immediate repeats); every phoneme emits
/// d in [min_dur, max_dur] copies of its fixed orthonormal embedding, each
/// copy perturbed by iid Gaussian noise.
struct SynthSpec {
  int n_phonemes = 8;
  int emb_dim = 16;
  double noise_sigma = 0.05;
  int min_dur = 2;
  int max_dur = 2;
  int n_utts = 100;
  uint64_t seed = 0;
};

struct SynthCorpus {
  SynthSpec spec;
  std::vector<std::string> phone_symbols;  // p1..pN then sil
  int sil_id = 0;
  Matrix embeddings;  // n_phonemes x emb_dim; row j belongs to phone id j+1
  std::vector<std::string> utt_ids;
  std::vector<Matrix> features;
  std::vector<std::vector<int>> truth;      // phone ids per utterance
  std::vector<std::vector<int>> durations;  // frames per phone, aligned with truth

  PhonemeTable phoneme_table() const { return PhonemeTable(phone_symbols, "sil"); }
};

SynthCorpus generate_synthetic(const SynthSpec& spec);

/// Lays out kaldi-style split dirs under root: train/ calib/ eval/, plus a
/// shared phones.txt and a unit lexicon (one word per phoneme). The train
/// text is the multiset of training transcripts under synthetic text ids in
/// shuffled order, so nothing in the training store pairs text with audio.
/// Reference transcripts go to ref_text in every split; they exist for
/// evaluation only.
void write_synth_splits(const SynthCorpus& corpus, const std::string& root,
                        int n_train, int n_calib, int n_eval);

}  // namespace euro::corpus

#endif  // EURO_CORPUS_SYNTH_HPP_
