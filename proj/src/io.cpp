// Copyright 2026 The dilaug Authors
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

#include "dilaug/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "dilaug/errors.hpp"

namespace dilaug {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Calls fn(line_number, fields) for every non-blank, non-comment line.
template <class Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_number;
    const auto fields = split_fields(line);
    if (!fields.empty() && fields[0] != "c") fn(line_number, fields);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

Vertex parse_vertex(std::string_view field, int n, int line) {
  const auto v = to_int(field);
  if (!v) throw ParseError(line, "bad vertex '" + std::string(field) + "'");
  if (*v < 1 || *v > n) {
    throw ParseError(line, "vertex " + std::string(field) + " out of range");
  }
  return static_cast<Vertex>(*v - 1);
}

Edge parse_pair(std::string_view a, std::string_view b, int n, int line) {
  const Vertex u = parse_vertex(a, n, line);
  const Vertex v = parse_vertex(b, n, line);
  if (u == v) throw ParseError(line, "self-loop");
  return make_edge(u, v);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  int header_line = 0;
  int n = 0;
  int k = 0;
  Stretch t;
  std::vector<WeightedEdge> gamma;
  std::vector<Edge> g;
  std::set<Edge> seen_gamma;
  std::set<Edge> seen_g;
  for_each_record(text, [&](int line, const std::vector<std::string_view>& f) {
    if (f[0] == "p") {
      if (header_line != 0) throw ParseError(line, "duplicate header");
      if (f.size() != 5 || f[1] != "dilaug") {
        throw ParseError(line, "malformed header");
      }
      const auto nv = to_int(f[2]);
      const auto kv = to_int(f[3]);
      const auto tv = Stretch::parse(f[4]);
      if (!nv || *nv < 1 || *nv > 1'000'000) {
        throw ParseError(line, "header: bad vertex count");
      }
      if (!kv || *kv < 0 || *kv > 1'000'000'000) {
        throw ParseError(line, "header: bad budget");
      }
      if (!tv || *tv < Stretch(1, 1)) {
        throw ParseError(line, "header: bad stretch");
      }
      header_line = line;
      n = static_cast<int>(*nv);
      k = static_cast<int>(*kv);
      t = *tv;
      return;
    }
    if (header_line == 0) {
      throw ParseError(line, "expected header before records");
    }
    if (f[0] == "e") {
      if (f.size() != 4) throw ParseError(line, "malformed 'e' line");
      const Edge e = parse_pair(f[1], f[2], n, line);
      const auto w = to_int(f[3]);
      if (!w || *w < 1) throw ParseError(line, "weight must be >= 1");
      if (!seen_gamma.insert(e).second) {
        throw ParseError(line, "duplicate Gamma edge");
      }
      gamma.push_back({e, *w});
    } else if (f[0] == "g") {
      if (f.size() != 3) throw ParseError(line, "malformed 'g' line");
      const Edge e = parse_pair(f[1], f[2], n, line);
      if (!seen_g.insert(e).second) throw ParseError(line, "duplicate G edge");
      g.push_back(e);
    } else {
      throw ParseError(line, "unknown record '" + std::string(f[0]) + "'");
    }
  });
  if (header_line == 0) throw ParseError(0, "missing header");
  try {
    return Instance(Graph(n, gamma), std::move(g), k, t);
  } catch (const MetricError& e) {
    throw ParseError(header_line, e.what());
  }
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream os;
  os << "p dilaug " << inst.n() << ' ' << inst.k() << ' '
     << inst.t().to_string() << '\n';
  for (const WeightedEdge& we : inst.gamma().edges()) {
    os << "e " << we.edge.u + 1 << ' ' << we.edge.v + 1 << ' ' << we.weight
       << '\n';
  }
  for (const Edge& e : inst.g_edges()) {
    os << "g " << e.u + 1 << ' ' << e.v + 1 << '\n';
  }
  return os.str();
}

Solution parse_solution(std::string_view text, int n) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for_each_record(text, [&](int line, const std::vector<std::string_view>& f) {
    if (f[0] != "s" || f.size() != 3) {
      throw ParseError(line, "expected 's <u> <v>'");
    }
    const Edge e = parse_pair(f[1], f[2], n, line);
    if (!seen.insert(e).second) throw ParseError(line, "duplicate pair");
    edges.push_back(e);
  });
  return Solution(std::move(edges));
}

std::string serialize_solution(const Solution& s) {
  std::ostringstream os;
  for (const Edge& e : s) os << "s " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return os.str();
}

std::string serialize_labels(const std::vector<std::string>& labels) {
  std::ostringstream os;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    os << "l " << v + 1 << ' ' << labels[v] << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

}  // namespace dilaug
