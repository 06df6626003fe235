// euro/corpus/phoneme_table.cc

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

#include "euro/corpus/phoneme_table.hpp"

#include <sstream>

#include "euro/base/error.hpp"

namespace euro::corpus {

namespace {
bool is_reserved(const std::string& s) {
  return s == "<eps>" || s == "<s>" || s == "</s>" || s == "<unk>";
}
}  // namespace

PhonemeTable::PhonemeTable(const std::vector<std::string>& symbols,
                           const std::string& sil_symbol) {
  if (symbols.empty()) throw ConfigError("empty phoneme inventory");
  for (const auto& s : symbols) {
    if (is_reserved(s))
      throw DataFormatError("reserved symbol in phoneme table: " + s);
    table_.add(s);
  }
  sil_id_ = table_.find(sil_symbol);
  if (sil_id_ < 0)
    throw ConfigError("silence symbol '" + sil_symbol +
                      "' missing from phoneme table");
}

std::vector<int> PhonemeTable::ids(const std::vector<std::string>& symbols) const {
  std::vector<int> out;
  out.reserve(symbols.size());
  for (const auto& s : symbols) out.push_back(id(s));
  return out;
}

std::string PhonemeTable::to_string(const std::vector<int>& ids) const {
  std::ostringstream out;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) out << ' ';
    out << name(ids[i]);
  }
  return out.str();
}

void PhonemeTable::save(const std::string& path) const { table_.save(path); }

PhonemeTable PhonemeTable::load(const std::string& path,
                                const std::string& sil_symbol) {
  SymbolTable raw = SymbolTable::load(path);
  return PhonemeTable(raw.symbols(), sil_symbol);
}

}  // namespace euro::corpus
