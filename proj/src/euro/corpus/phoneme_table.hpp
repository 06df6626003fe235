// euro/corpus/phoneme_table.hpp

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

#ifndef EURO_CORPUS_PHONEME_TABLE_HPP_
#define EURO_CORPUS_PHONEME_TABLE_HPP_

#include <string>
#include <vector>

#include "euro/base/symbol_table.hpp"

namespace euro::corpus {

/// Phoneme inventory with a reserved silence symbol. Ids are dense starting
/// at 1; id 0 stays <eps> for FST use. <s> and </s> are sentence sentinels
/// owned by the LM layer and may not appear here.
class PhonemeTable {
 public:
  PhonemeTable(const std::vector<std::string>& symbols,
               const std::string& sil_symbol);

  int sil_id() const { return sil_id_; }
  int size() const { return table_.size(); }

  int id(const std::string& symbol) const { return table_.must_find(symbol); }
  int find(const std::string& symbol) const { return table_.find(symbol); }
  const std::string& name(int id) const { return table_.name(id); }
  const SymbolTable& symbols() const { return table_; }

  std::vector<int> ids(const std::vector<std::string>& symbols) const;
  std::string to_string(const std::vector<int>& ids) const;

  void save(const std::string& path) const;
  static PhonemeTable load(const std::string& path,
                           const std::string& sil_symbol = "sil");

 private:
  SymbolTable table_;
  int sil_id_;
};

}  // namespace euro::corpus

#endif  // EURO_CORPUS_PHONEME_TABLE_HPP_
