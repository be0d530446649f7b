// Copyright 2026 The passnet Authors
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

#ifndef PASSNET_ERROR_HPP_
#define PASSNET_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace passnet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed fixture document. The message names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a data invariant (self-pass, non-square
/// matrix, negative count, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (N too small, weight outside
/// [0,1], degenerate network).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Fixed-point iteration hit its iteration cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class RenderError : public Error {
 public:
  using Error::Error;
};

}  // namespace passnet

#endif  // PASSNET_ERROR_HPP_
