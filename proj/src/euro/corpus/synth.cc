// euro/corpus/synth.cc

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

#include "euro/corpus/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "euro/base/error.hpp"
#include "euro/base/io.hpp"
#include "euro/corpus/archive.hpp"
#include "euro/corpus/kaldi_dir.hpp"

namespace euro::corpus {

namespace {

constexpr int kMinLen = 4;
constexpr int kMaxLen = 12;

void validate(const SynthSpec& s) {
  if (s.n_phonemes < 2 || s.n_phonemes > s.emb_dim)
    throw ConfigError("need 2 <= n_phonemes <= emb_dim");
  if (s.min_dur < 1 || s.min_dur > s.max_dur)
    throw ConfigError("need 1 <= min_dur <= max_dur");
  if (s.noise_sigma < 0) throw ConfigError("noise_sigma must be >= 0");
  if (s.n_utts < 1) throw ConfigError("n_utts must be >= 1");
}

// Random orthonormal rows via Gram-Schmidt on a Gaussian matrix.
Matrix orthonormal_embeddings(int n, int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix basis(dim, dim);
  for (double& v : basis.data()) v = gauss(rng);
  for (int i = 0; i < dim; ++i) {
    double* ri = basis.row(i);
    for (int j = 0; j < i; ++j) {
      const double* rj = basis.row(j);
      double dot = std::inner_product(ri, ri + dim, rj, 0.0);
      for (int c = 0; c < dim; ++c) ri[c] -= dot * rj[c];
    }
    double norm = std::sqrt(std::inner_product(ri, ri + dim, ri, 0.0));
    if (norm < 1e-8) throw DegenerateDataError("degenerate random basis");
    for (int c = 0; c < dim; ++c) ri[c] /= norm;
  }
  Matrix emb(n, dim);
  for (int i = 0; i < n; ++i)
    std::copy(basis.row(i), basis.row(i) + dim, emb.row(i));
  return emb;
}

}  // namespace

SynthCorpus generate_synthetic(const SynthSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.seed);

  SynthCorpus out;
  out.spec = spec;
  for (int p = 1; p <= spec.n_phonemes; ++p)
    out.phone_symbols.push_back("p" + std::to_string(p));
  out.phone_symbols.push_back("sil");
  out.sil_id = spec.n_phonemes + 1;
  out.embeddings = orthonormal_embeddings(spec.n_phonemes, spec.emb_dim, rng);

  std::uniform_int_distribution<int> len_dist(kMinLen, kMaxLen);
  std::uniform_int_distribution<int> first_dist(1, spec.n_phonemes);
  std::uniform_int_distribution<int> other_dist(1, spec.n_phonemes - 1);
  std::uniform_int_distribution<int> dur_dist(spec.min_dur, spec.max_dur);
  std::normal_distribution<double> noise(0.0, spec.noise_sigma > 0
                                                  ? spec.noise_sigma
                                                  : 1.0);

  for (int u = 0; u < spec.n_utts; ++u) {
    char id[32];
    std::snprintf(id, sizeof(id), "utt_%05d", u);
    out.utt_ids.emplace_back(id);

    int len = len_dist(rng);
    std::vector<int> phones(len);
    std::vector<int> durs(len);
    int total_frames = 0;
    for (int i = 0; i < len; ++i) {
      if (i == 0) {
        phones[i] = first_dist(rng);
      } else {
        int draw = other_dist(rng);  // skip the previous phone
        phones[i] = draw < phones[i - 1] ? draw : draw + 1;
      }
      durs[i] = dur_dist(rng);
      total_frames += durs[i];
    }

    Matrix feats(total_frames, spec.emb_dim);
    int row = 0;
    for (int i = 0; i < len; ++i) {
      const double* emb = out.embeddings.row(phones[i] - 1);
      for (int d = 0; d < durs[i]; ++d, ++row) {
        double* f = feats.row(row);
        for (int c = 0; c < spec.emb_dim; ++c) {
          f[c] = emb[c];
          if (spec.noise_sigma > 0) f[c] += noise(rng);
        }
      }
    }
    out.features.push_back(std::move(feats));
    out.truth.push_back(std::move(phones));
    out.durations.push_back(std::move(durs));
  }
  return out;
}

namespace {

void write_split(const SynthCorpus& corpus, const std::string& dir, int begin,
                 int end, bool with_unpaired_text) {
  make_dirs(dir);
  PhonemeTable table = corpus.phoneme_table();

  std::vector<std::pair<std::string, Matrix>> entries;
  KaldiDataDir data;
  std::ostringstream refs;
  for (int u = begin; u < end; ++u) {
    const std::string& id = corpus.utt_ids[u];
    entries.emplace_back(id, corpus.features[u]);
    data.utterances.push_back({id, "feats.ark:" + id});
    refs << id << ' ' << table.to_string(corpus.truth[u]) << '\n';
  }
  write_archive(dir + "/feats.ark", entries, 1);

  if (with_unpaired_text) {
    std::vector<int> order(end - begin);
    std::iota(order.begin(), order.end(), begin);
    std::mt19937_64 shuffle_rng(corpus.spec.seed ^ 0x9e3779b97f4a7c15ull);
    std::shuffle(order.begin(), order.end(), shuffle_rng);
    int n = 0;
    for (int u : order) {
      char id[32];
      std::snprintf(id, sizeof(id), "text_%05d", n++);
      data.text.emplace_back(id, table.to_string(corpus.truth[u]));
    }
  } else {
    // Decode-only splits still need a non-empty text file to be a
    // well-formed directory; reuse the references.
    for (int u = begin; u < end; ++u)
      data.text.emplace_back(corpus.utt_ids[u],
                             table.to_string(corpus.truth[u]));
  }
  write_kaldi_dir(data, dir);
  write_file(dir + "/ref_text", refs.str());
}

}  // namespace

void write_synth_splits(const SynthCorpus& corpus, const std::string& root,
                        int n_train, int n_calib, int n_eval) {
  if (n_train < 1 || n_calib < 0 || n_eval < 0)
    throw ConfigError("bad split sizes");
  if (n_train + n_calib + n_eval > corpus.spec.n_utts)
    throw ConfigError("splits exceed corpus size");
  make_dirs(root);
  corpus.phoneme_table().save(root + "/phones.txt");

  // Unit lexicon: each phoneme doubles as a word so WFST word decoding is
  // exercised on the synthetic corpus; sil is supplied by the L graph.
  std::ostringstream lex;
  for (int p = 0; p < corpus.spec.n_phonemes; ++p)
    lex << corpus.phone_symbols[p] << ' ' << corpus.phone_symbols[p] << '\n';
  write_file(root + "/lexicon.txt", lex.str());

  write_split(corpus, root + "/train", 0, n_train, true);
  if (n_calib > 0)
    write_split(corpus, root + "/calib", n_train, n_train + n_calib, false);
  if (n_eval > 0)
    write_split(corpus, root + "/eval", n_train + n_calib,
                n_train + n_calib + n_eval, false);
}

}  // namespace euro::corpus
