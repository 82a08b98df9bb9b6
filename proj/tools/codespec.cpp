// Copyright 2026 The wulist Authors.
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

#include "codespec.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "wulist/errors.hpp"

namespace wulist::cli {
namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) throw UsageError(std::string("code spec lacks \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw UsageError(std::string("code spec field \"") + key + "\" has the wrong type");
  }
}

std::vector<Elem> elems(const Json& j, const char* key, const Field& f) {
  auto v = get<std::vector<std::int64_t>>(j, key);
  std::vector<Elem> out;
  for (auto x : v) {
    if (x < 0 || x >= static_cast<std::int64_t>(f.order()))
      throw UsageError(std::string("\"") + key + "\" holds a non-element " + std::to_string(x));
    out.push_back(static_cast<Elem>(x));
  }
  return out;
}

}  // namespace

Json field_to_json(const Field& f) {
  Json j;
  j["p"] = f.characteristic();
  j["m"] = f.degree();
  if (f.degree() > 1) j["modulus"] = f.spec().modulus;
  return j;
}

FieldPtr field_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("\"field\" must be an object");
  FieldSpec spec;
  spec.p = get<std::uint32_t>(j, "p");
  spec.m = get<std::uint32_t>(j, "m");
  if (j.contains("modulus")) spec.modulus = get<std::vector<std::uint32_t>>(j, "modulus");
  return Field::make(std::move(spec));
}

Json code_to_json(const AnyCode& any) {
  Json j;
  if (const auto* g = std::get_if<GrsCode>(&any)) {
    j["type"] = "grs";
    j["field"] = field_to_json(g->field());
    j["n"] = g->n();
    j["k"] = g->k();
    j["alphas"] = g->alphas();
    j["multipliers"] = g->mults();
  } else {
    const auto& c = std::get<GoppaCode>(any);
    j["type"] = "goppa";
    j["field"] = field_to_json(c.field());
    j["n"] = c.n();
    j["t"] = c.t();
    j["goppa_poly"] = c.g().coeffs();
    j["support"] = c.support();
  }
  return j;
}

AnyCode code_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("code spec must be a JSON object");
  const auto type = get<std::string>(j, "type");
  if (!j.contains("field")) throw UsageError("code spec lacks \"field\"");
  FieldPtr f = field_from_json(j.at("field"));
  if (type == "grs") {
    auto alphas = elems(j, "alphas", *f);
    auto mults = elems(j, "multipliers", *f);
    if (get<int>(j, "n") != static_cast<int>(alphas.size()))
      throw UsageError("\"n\" does not match the number of alphas");
    return GrsCode(f, get<int>(j, "k"), std::move(alphas), std::move(mults));
  }
  if (type == "goppa") {
    Poly g(*f, elems(j, "goppa_poly", *f));
    auto support = elems(j, "support", *f);
    if (get<int>(j, "n") != static_cast<int>(support.size()))
      throw UsageError("\"n\" does not match the support size");
    if (j.contains("t") && get<int>(j, "t") != g.degree().value_or(-1))
      throw UsageError("\"t\" does not match the Goppa polynomial");
    return GoppaCode(f, std::move(g), std::move(support));
  }
  throw UsageError("unknown code type \"" + type + "\"");
}

AnyCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  return code_from_json(j);
}

std::vector<std::vector<Elem>> read_words(std::istream& in) {
  std::vector<std::vector<Elem>> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Elem> w;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0 || v > std::numeric_limits<Elem>::max())
        throw UsageError("bad word entry \"" + tok + "\"");
      w.push_back(static_cast<Elem>(v));
    }
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::vector<Elem>> read_words(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_words(in);
}

void write_words(std::ostream& out, const std::vector<std::vector<Elem>>& words) {
  for (const auto& w : words) {
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
    out << '\n';
  }
}

std::vector<std::uint32_t> parse_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0 || v > std::numeric_limits<std::uint32_t>::max())
      throw UsageError("bad list entry \"" + tok + "\"");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

}  // namespace wulist::cli
