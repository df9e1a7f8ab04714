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

#include <string>
#include <string_view>

#include "reef/mesh.hpp"

namespace reef {

// Wavefront OBJ reader. Interprets v/vt/vn/f records and ignores everything
// else; n-gon faces are fan-triangulated (0-1-2, 0-2-3, ...). Relative
// (negative) indices are rejected. Throws ParseError with the line number on
// malformed records and out-of-range indices.
TriangleMesh load_obj(std::string_view text);

// Serializer matching load_obj. Positions round-trip exactly (shortest
// exact decimal form); output bytes are deterministic for a given mesh.
std::string save_obj(const TriangleMesh& mesh);

TriangleMesh load_obj_file(const std::string& path);
void save_obj_file(const TriangleMesh& mesh, const std::string& path);

// Whole-file helpers shared by the CLI and pipeline.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

}  // namespace reef
