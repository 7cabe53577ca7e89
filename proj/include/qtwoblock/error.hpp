// Copyright 2026 The qtwoblock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QTWOBLOCK_ERROR_HPP
#define QTWOBLOCK_ERROR_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qtwoblock {

/// Malformed or inconsistent user input (spec files, words, polynomials, tables).
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Syntax error at a byte offset of the parsed text.
class ParseError : public InputError {
   public:
    ParseError(const std::string &what, std::size_t offset)
        : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {
    }
    std::size_t offset() const noexcept {
        return offset_;
    }

   private:
    std::size_t offset_;
};

/// An exhaustive search would examine more vectors than allowed.
class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(std::size_t dim, std::uint64_t budget)
        : std::runtime_error(
              "budget exceeded: a kernel of dimension " + std::to_string(dim) + " has more than " +
              std::to_string(budget) + " vectors"),
          dim_(dim),
          budget_(budget) {
    }
    std::size_t dim() const noexcept {
        return dim_;
    }
    std::uint64_t budget() const noexcept {
        return budget_;
    }

   private:
    std::size_t dim_;
    std::uint64_t budget_;
};

}  // namespace qtwoblock

#endif
