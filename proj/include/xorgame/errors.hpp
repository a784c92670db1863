// Copyright 2026 The xorgame Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace xorgame {

/// Arguments outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Problem too large for exhaustive enumeration under the current guard.
class SizeError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// An operator combination that does not determine a unique observable.
class DegeneracyError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A strategy construction that failed to reach its target bias.
class ConstructionError : public std::runtime_error {
   public:
    ConstructionError(const std::string &what, double best_bias)
        : std::runtime_error(what), best_bias_(best_bias) {
    }

    double best_bias() const {
        return best_bias_;
    }

   private:
    double best_bias_;
};

}  // namespace xorgame
