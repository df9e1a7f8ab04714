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

#include "reef/obj_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "reef/error.hpp"

namespace reef {

namespace {

[[noreturn]] void fail(size_t line, const std::string& msg) {
  throw ParseError("OBJ line " + std::to_string(line) + ": " + msg);
}

// Splits on spaces/tabs, skipping runs of separators.
void split_tokens(std::string_view s, std::vector<std::string_view>& out) {
  out.clear();
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
}

double parse_double(std::string_view tok, size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(line, "expected a number, got '" + std::string(tok) + "'");
  return value;
}

long parse_index(std::string_view tok, size_t line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(line, "expected an index, got '" + std::string(tok) + "'");
  return value;
}

// One f-record corner: v, v/vt, v//vn or v/vt/vn. Missing fields are 0.
struct Corner {
  long v = 0, vt = 0, vn = 0;
};

Corner parse_corner(std::string_view tok, size_t line) {
  Corner c;
  size_t s1 = tok.find('/');
  if (s1 == std::string_view::npos) {
    c.v = parse_index(tok, line);
    return c;
  }
  c.v = parse_index(tok.substr(0, s1), line);
  std::string_view rest = tok.substr(s1 + 1);
  size_t s2 = rest.find('/');
  if (s2 == std::string_view::npos) {
    if (!rest.empty()) c.vt = parse_index(rest, line);
    return c;
  }
  if (s2 > 0) c.vt = parse_index(rest.substr(0, s2), line);
  std::string_view vn = rest.substr(s2 + 1);
  if (!vn.empty()) c.vn = parse_index(vn, line);
  return c;
}

size_t resolve(long idx, size_t count, const char* what, size_t line) {
  if (idx < 0) fail(line, std::string("relative (negative) ") + what + " index not supported");
  if (idx == 0) fail(line, std::string("zero ") + what + " index");
  if (size_t(idx) > count)
    fail(line, std::string(what) + " index " + std::to_string(idx) +
                   " out of range (count " + std::to_string(count) + ")");
  return size_t(idx) - 1;
}

void append_double(std::string& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  out.append(buf, ptr);
}

}  // namespace

TriangleMesh load_obj(std::string_view text) {
  TriangleMesh mesh;
  std::vector<Vec2> vts;
  std::vector<Vec3> vns;
  // Normals/UVs referenced per corner; normals resolve to per-vertex slots.
  std::vector<long> vertex_vn;
  bool any_vt = false;

  std::vector<std::string_view> tok;
  std::vector<Corner> corners;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    size_t end = eol == std::string_view::npos ? text.size() : eol;
    std::string_view line = text.substr(pos, end - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    split_tokens(line, tok);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "v") {
      if (tok.size() < 4) fail(line_no, "v record needs 3 coordinates");
      mesh.positions.push_back({parse_double(tok[1], line_no),
                                parse_double(tok[2], line_no),
                                parse_double(tok[3], line_no)});
      vertex_vn.push_back(0);
    } else if (tok[0] == "vt") {
      if (tok.size() < 3) fail(line_no, "vt record needs 2 coordinates");
      vts.push_back({parse_double(tok[1], line_no), parse_double(tok[2], line_no)});
    } else if (tok[0] == "vn") {
      if (tok.size() < 4) fail(line_no, "vn record needs 3 coordinates");
      vns.push_back({parse_double(tok[1], line_no), parse_double(tok[2], line_no),
                     parse_double(tok[3], line_no)});
    } else if (tok[0] == "f") {
      if (tok.size() < 4) fail(line_no, "f record needs at least 3 corners");
      corners.clear();
      for (size_t i = 1; i < tok.size(); ++i)
        corners.push_back(parse_corner(tok[i], line_no));
      for (auto& c : corners) {
        c.v = long(resolve(c.v, mesh.positions.size(), "vertex", line_no));
        if (c.vt != 0) {
          c.vt = long(resolve(c.vt, vts.size(), "texture", line_no));
          any_vt = true;
        } else {
          c.vt = -1;
        }
        if (c.vn != 0) {
          c.vn = long(resolve(c.vn, vns.size(), "normal", line_no));
          vertex_vn[size_t(c.v)] = c.vn + 1;
        }
      }
      for (size_t i = 2; i < corners.size(); ++i) {
        mesh.faces.push_back({uint32_t(corners[0].v), uint32_t(corners[i - 1].v),
                              uint32_t(corners[i].v)});
        for (const Corner* c : {&corners[0], &corners[i - 1], &corners[i]})
          mesh.corner_uvs.push_back(c->vt >= 0 ? vts[size_t(c->vt)] : Vec2{0.0, 0.0});
      }
    }
    // Other record types (o, g, s, mtllib, usemtl, ...) are ignored.
  }

  if (!any_vt) mesh.corner_uvs.clear();
  bool any_vn = false;
  for (long vn : vertex_vn) any_vn |= vn != 0;
  if (any_vn) {
    mesh.normals.assign(mesh.positions.size(), Vec3{0.0, 0.0, 1.0});
    for (size_t i = 0; i < vertex_vn.size(); ++i)
      if (vertex_vn[i] != 0) mesh.normals[i] = vns[size_t(vertex_vn[i] - 1)];
  }
  if (auto err = invariant_violation(mesh)) throw ParseError("OBJ: " + *err);
  return mesh;
}

std::string save_obj(const TriangleMesh& mesh) {
  require_valid(mesh);
  std::string out;
  out.reserve(mesh.vertex_count() * 40 + mesh.face_count() * 24);
  for (const auto& p : mesh.positions) {
    out += "v ";
    append_double(out, p.x);
    out += ' ';
    append_double(out, p.y);
    out += ' ';
    append_double(out, p.z);
    out += '\n';
  }
  bool uvs = mesh.has_uvs();
  bool normals = mesh.has_normals();
  if (uvs) {
    for (const auto& t : mesh.corner_uvs) {
      out += "vt ";
      append_double(out, t.x);
      out += ' ';
      append_double(out, t.y);
      out += '\n';
    }
  }
  if (normals) {
    for (const auto& n : mesh.normals) {
      out += "vn ";
      append_double(out, n.x);
      out += ' ';
      append_double(out, n.y);
      out += ' ';
      append_double(out, n.z);
      out += '\n';
    }
  }
  char buf[96];
  for (size_t f = 0; f < mesh.face_count(); ++f) {
    const auto& t = mesh.faces[f];
    out += 'f';
    for (int k = 0; k < 3; ++k) {
      unsigned long v = t[k] + 1ul;
      unsigned long vt = 3 * f + size_t(k) + 1;
      int len;
      if (uvs && normals)
        len = std::snprintf(buf, sizeof(buf), " %lu/%lu/%lu", v, vt, v);
      else if (uvs)
        len = std::snprintf(buf, sizeof(buf), " %lu/%lu", v, vt);
      else if (normals)
        len = std::snprintf(buf, sizeof(buf), " %lu//%lu", v, v);
      else
        len = std::snprintf(buf, sizeof(buf), " %lu", v);
      out.append(buf, size_t(len));
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path);
  out.write(bytes.data(), std::streamsize(bytes.size()));
  if (!out) throw Error("write failed: " + path);
}

TriangleMesh load_obj_file(const std::string& path) { return load_obj(read_file(path)); }

void save_obj_file(const TriangleMesh& mesh, const std::string& path) {
  write_file(path, save_obj(mesh));
}

}  // namespace reef
