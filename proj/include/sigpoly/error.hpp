// Copyright 2026 The sigpoly Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIGPOLY_ERROR_HPP_
#define SIGPOLY_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigpoly {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live over different alphabets / variable counts / dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the domain of the operation: a letter out of
// range, an empty-word component where T^{>=1} is required, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// M_p and friends are only defined for maps with p(0) = 0.
class NotVanishingAtOrigin : public Error {
 public:
  using Error::Error;
};

class NonHomogeneousMap : public Error {
 public:
  using Error::Error;
};

// A truncated signature is too short for the requested computation.
class TruncationShortfall : public Error {
 public:
  TruncationShortfall(std::size_t required, std::size_t available)
      : Error("signature truncated at level " + std::to_string(available) +
              " but level " + std::to_string(required) + " is required"),
        required_(required),
        available_(available) {}

  std::size_t required() const { return required_; }
  std::size_t available() const { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sigpoly

#endif  // SIGPOLY_ERROR_HPP_
