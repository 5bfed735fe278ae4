// Copyright 2026 The vkred Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace vkred {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong lengths, unknown indices, out-of-range symbols.
class InputError : public Error {
 public:
  using Error::Error;
};

// An exact oracle refused because its enumeration or lattice cap is exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

// A structural precondition (3-regularity, feasibility, totality...) fails.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A randomized or greedy construction could not produce a valid object.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

namespace detail {

template <typename E>
inline void require(bool condition, const std::string& message) {
  if (!condition) throw E(message);
}

}  // namespace detail
}  // namespace vkred
