// euro/base/error.hpp

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

#ifndef EURO_BASE_ERROR_HPP_
#define EURO_BASE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace euro {

// Common base so callers can catch anything coming out of the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define EURO_DEFINE_ERROR(Name)                                \
  class Name : public Error {                                  \
   public:                                                     \
    explicit Name(const std::string& msg)                      \
        : Error(std::string(#Name) + ": " + msg) {}            \
  }

EURO_DEFINE_ERROR(DataFormatError);
EURO_DEFINE_ERROR(NotFoundError);
EURO_DEFINE_ERROR(CorruptArchiveError);
EURO_DEFINE_ERROR(EmptyCorpusError);
EURO_DEFINE_ERROR(ConfigError);
EURO_DEFINE_ERROR(DegenerateDataError);
EURO_DEFINE_ERROR(ShapeError);
EURO_DEFINE_ERROR(ContractError);
EURO_DEFINE_ERROR(FormatError);
EURO_DEFINE_ERROR(OovError);
EURO_DEFINE_ERROR(EmptyLatticeError);
EURO_DEFINE_ERROR(UndefinedRateError);
EURO_DEFINE_ERROR(PrerequisiteError);

#undef EURO_DEFINE_ERROR

}  // namespace euro

#endif  // EURO_BASE_ERROR_HPP_
