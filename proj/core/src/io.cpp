// Copyright 2026 The Tuttice Authors.
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

#include "tuttice/io.hpp"

#include <limits>
#include <utility>
#include <vector>

#include "json.hpp"

#include "tuttice/error.hpp"
#include "tuttice/subset.hpp"

namespace tuttice {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, what);
}

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) {
    malformed(std::string("field '") + key + "' must be an integer");
  }
  const auto value = v.get<long long>();
  if (value < -(1LL << 30) || value > (1LL << 30)) {
    malformed(std::string("field '") + key + "' out of range");
  }
  return static_cast<int>(value);
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

Polymatroid from_table(const json& j) {
  const int n = int_field(j, "n");
  if (n < 1) malformed("'n' must be positive");
  if (n > kMaxGroundSize) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "n=" + std::to_string(n) + " exceeds the cap of " +
                    std::to_string(kMaxGroundSize));
  }
  const json& rank = field(j, "rank");
  if (!rank.is_object()) malformed("'rank' must be an object");
  std::vector<int> table(std::size_t{1} << n, 0);
  std::vector<bool> seen(table.size(), false);
  for (const auto& [key, value] : rank.items()) {
    const Subset s = parse_subset_key(key, n);
    if (!value.is_number_integer()) malformed("rank of '" + key + "' not an integer");
    if (seen[s]) malformed("duplicate rank entry for '" + key + "'");
    seen[s] = true;
    table[s] = value.get<int>();
  }
  for (Subset s = 0; s < seen.size(); ++s) {
    if (!seen[s]) malformed("missing rank entry for '" + subset_key(s, n) + "'");
  }
  return make_polymatroid(n, std::move(table));
}

Polymatroid from_graph(const json& j) {
  const int vertices = int_field(j, "vertices");
  const json& edges = field(j, "edges");
  if (!edges.is_array()) malformed("'edges' must be an array");
  std::vector<std::pair<int, int>> list;
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      malformed("each edge must be a pair of integers");
    }
    list.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return graphic_matroid(vertices, list);
}

Polymatroid from_vectors(const json& j) {
  const json& vectors = field(j, "vectors");
  if (!vectors.is_array()) malformed("'vectors' must be an array");
  std::vector<BaseVector> list;
  for (const json& v : vectors) {
    if (!v.is_array()) malformed("each base vector must be an array");
    BaseVector x;
    for (const json& c : v) {
      if (!c.is_number_integer()) malformed("base vector entries must be integers");
      x.push_back(c.get<int>());
    }
    list.push_back(std::move(x));
  }
  return from_bases(list);
}

json coefficient_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() &&
      c <= std::numeric_limits<long long>::max()) {
    return c.convert_to<long long>();
  }
  return c.str();
}

Integer parse_coefficient(const json& c) {
  if (c.is_number_integer()) return Integer(c.get<long long>());
  if (c.is_string()) {
    try {
      return Integer(c.get<std::string>());
    } catch (const std::exception&) {
      malformed("bad coefficient '" + c.get<std::string>() + "'");
    }
  }
  malformed("coefficient must be an integer or a decimal string");
}

}  // namespace

Polymatroid parse_polymatroid(std::string_view json_text) {
  const json j = parse(json_text);
  if (!j.is_object()) malformed("polymatroid description must be an object");
  const json& type = field(j, "type");
  if (!type.is_string()) malformed("'type' must be a string");
  const std::string kind = type.get<std::string>();
  if (kind == "table") return from_table(j);
  if (kind == "uniform") return uniform_matroid(int_field(j, "r"), int_field(j, "n"));
  if (kind == "graph") return from_graph(j);
  if (kind == "bases") return from_vectors(j);
  malformed("unknown type '" + kind + "'");
}

std::string polymatroid_to_json(const Polymatroid& m) {
  std::string out = R"({"type":"table","n":)" + std::to_string(m.size()) +
                    R"(,"rank":{)";
  for (Subset s = 0; s <= m.ground(); ++s) {
    if (s) out += ",";
    out += json(subset_key(s, m.size())).dump() + ":" + std::to_string(m.rank(s));
  }
  return out + "}}";
}

std::string polynomial_to_json(const BivarPoly& p) {
  using nlohmann::ordered_json;
  ordered_json terms = ordered_json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    ordered_json t = ordered_json::object();
    t["i"] = it->first.i;
    t["j"] = it->first.j;
    t["c"] = coefficient_json(it->second);
    terms.push_back(std::move(t));
  }
  ordered_json j = ordered_json::object();
  j["vars"] = {"x", "y"};
  j["terms"] = std::move(terms);
  return j.dump();
}

BivarPoly parse_polynomial(std::string_view json_text) {
  const json j = parse(json_text);
  if (!j.is_object()) malformed("polynomial must be an object");
  const json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("'terms' must be an array");
  BivarPoly p;
  for (const json& t : terms) {
    if (!t.is_object()) malformed("each term must be an object");
    const int i = int_field(t, "i");
    const int jj = int_field(t, "j");
    if (i < 0 || jj < 0) malformed("exponents must be nonnegative");
    p.add_term(i, jj, parse_coefficient(field(t, "c")));
  }
  return p;
}

}  // namespace tuttice
