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

#ifndef WULIST_TOOLS_CODESPEC_HPP
#define WULIST_TOOLS_CODESPEC_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "wulist/goppa.hpp"
#include "wulist/grs.hpp"

namespace wulist::cli {

using Json = nlohmann::ordered_json;
using AnyCode = std::variant<GrsCode, GoppaCode>;

Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

Json code_to_json(const AnyCode& code);
/// Re-validates every code invariant. Throws UsageError on bad documents.
AnyCode code_from_json(const Json& j);

AnyCode load_code(const std::string& path);

/// Whitespace-separated integers, one word per line; blank lines skipped.
std::vector<std::vector<Elem>> read_words(std::istream& in);
std::vector<std::vector<Elem>> read_words(const std::string& path);
void write_words(std::ostream& out, const std::vector<std::vector<Elem>>& words);

/// "3,0,1" -> {3, 0, 1}.
std::vector<std::uint32_t> parse_list(const std::string& s);

}  // namespace wulist::cli

#endif  // WULIST_TOOLS_CODESPEC_HPP
