// Copyright 2026 The gaussmet Authors
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

#ifndef GAUSSMET_ERRORS_HPP
#define GAUSSMET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gaussmet {

/// Rejected input: bad dimensions, malformed files, out-of-range parameters.
/// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation that cannot proceed on otherwise well-formed input
/// (singular matrix, degenerate derivative, violated bound).
/// The CLI maps this to exit code 1.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gaussmet

#endif  // GAUSSMET_ERRORS_HPP
