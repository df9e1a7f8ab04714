// Copyright 2026 The Reef Authors.
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

namespace reef {

// Base class for all domain errors. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text or bytes (OBJ records, CLM1 streams).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Mesh fails a structural precondition (non-manifold edge, flipped atlas, ...).
class TopologyError : public Error {
 public:
  using Error::Error;
};

}  // namespace reef
