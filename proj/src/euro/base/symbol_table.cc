// euro/base/symbol_table.cc

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

#include "euro/base/symbol_table.hpp"

#include <sstream>

#include "euro/base/error.hpp"
#include "euro/base/io.hpp"

namespace euro {

int SymbolTable::add(const std::string& symbol) {
  if (symbol.empty()) throw DataFormatError("empty symbol");
  if (index_.count(symbol)) throw DataFormatError("duplicate symbol " + symbol);
  symbols_.push_back(symbol);
  int id = static_cast<int>(symbols_.size());
  index_[symbol] = id;
  return id;
}

int SymbolTable::find(const std::string& symbol) const {
  auto it = index_.find(symbol);
  return it == index_.end() ? -1 : it->second;
}

int SymbolTable::must_find(const std::string& symbol) const {
  int id = find(symbol);
  if (id < 0) throw OovError("symbol not in table: " + symbol);
  return id;
}

const std::string& SymbolTable::name(int id) const {
  static const std::string eps = "<eps>";
  if (id == kEps) return eps;
  if (id < 1 || id > size()) throw NotFoundError("symbol id out of range");
  return symbols_[id - 1];
}

void SymbolTable::save(const std::string& path) const {
  std::ostringstream out;
  out << "<eps> 0\n";
  for (int i = 0; i < size(); ++i) out << symbols_[i] << " " << (i + 1) << "\n";
  write_file(path, out.str());
}

SymbolTable SymbolTable::load(const std::string& path) {
  SymbolTable table;
  int lineno = 0;
  for (const auto& raw : read_lines(path)) {
    ++lineno;
    auto fields = split_ws(raw);
    if (fields.empty()) continue;
    if (fields.size() != 2)
      throw DataFormatError(path + ":" + std::to_string(lineno) +
                            ": expected 'symbol id'");
    int id = std::stoi(fields[1]);
    if (fields[0] == "<eps>") {
      if (id != 0)
        throw DataFormatError(path + ": <eps> must have id 0");
      continue;
    }
    int got = table.add(fields[0]);
    if (got != id)
      throw DataFormatError(path + ":" + std::to_string(lineno) +
                            ": ids must be dense and start at 1");
  }
  return table;
}

}  // namespace euro
