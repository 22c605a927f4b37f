/*
 * Copyright 2026 The spep Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace spep {

/// Mode index outside the state, or overlapping/duplicate mode lists.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A real parameter outside its admissible range (fidelity, efficiency, visibility...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quantity that needs a normalization is asked of a zero-trace state.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spep
