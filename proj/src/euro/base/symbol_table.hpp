// euro/base/symbol_table.hpp

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

#ifndef EURO_BASE_SYMBOL_TABLE_HPP_
#define EURO_BASE_SYMBOL_TABLE_HPP_

#include <string>
#include <unordered_map>
#include <vector>

namespace euro {

/// Bijection symbol <-> dense integer id. Id 0 is reserved for <eps> so the
/// same tables drive FST labels directly; real symbols get ids 1..size().
class SymbolTable {
 public:
  static constexpr int kEps = 0;

  SymbolTable() = default;

  /// Adds a symbol; returns its id. Duplicate symbols are an error.
  int add(const std::string& symbol);

  int find(const std::string& symbol) const;         // -1 when absent
  int must_find(const std::string& symbol) const;    // OovError when absent
  const std::string& name(int id) const;             // valid id required
  bool contains(const std::string& symbol) const { return find(symbol) >= 0; }

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  /// Text form: one "symbol id" line per entry, <eps> included.
  void save(const std::string& path) const;
  static SymbolTable load(const std::string& path);

 private:
  std::vector<std::string> symbols_;  // index i holds id i+1
  std::unordered_map<std::string, int> index_;
};

}  // namespace euro

#endif  // EURO_BASE_SYMBOL_TABLE_HPP_
