// Copyright 2026 The kestab Authors
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

#ifndef KESTAB_ERROR_HPP
#define KESTAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kestab {

enum class ErrorKind {
  kInvalidInput,   // violates a documented precondition or invariant
  kParse,          // malformed problem/function data
  kUnsupported,    // outside the supported root-system/field range
  kDivergent,      // integral does not converge (4rho not interior to 2P)
  kNumerical,      // quadrature cannot meet its configured tolerance
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace kestab

#endif  // KESTAB_ERROR_HPP
