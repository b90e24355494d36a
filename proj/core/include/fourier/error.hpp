// Copyright 2026 The Fourier Characterization Authors.
//
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

namespace fourier {

/// Base class of every exception thrown by the library. `kind()` is a stable
/// identifier ("GroupMismatch", "RowNotHomomorphic", ...) and `what()` is the
/// rendered form `Kind(details)`.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& details)
      : std::runtime_error(kind + "(" + details + ")"), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Caller handed in something outside an operation's domain: mismatched
/// groups, wrong lengths, out-of-range parameters.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A classifier met an operator that is not of the canonical form it
/// recognizes. The kind names the failed step.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace fourier
