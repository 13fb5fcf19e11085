#pragma once

// JSON element files, invariant profiles and separation certificates.
//
//   line:   {"kind":"line","nodes":[["x","y"],...],"left_slope":"s","right_slope":"s"}
//   circle: {"kind":"circle","circumference":"r","nodes":[["x","y"],...]}
//
// Rationals are strings "p" or "p/q". Output is always canonical.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "thompson/element.hpp"
#include "thompson/invariants.hpp"
#include "thompson/twisted.hpp"

namespace thompson {

using json = nlohmann::json;

// Malformed input. what() starts with the position: a byte offset for
// syntax errors, a JSON pointer for structural ones.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& message)
      : std::runtime_error(where + ": " + message) {}
};

json to_json(const Element& e);
Element element_from_json(const json& j, const std::string& where = "");
// Parses element text. `source` prefixes error positions.
Element parse_element(std::string_view text, const std::string& source = "<input>");
std::string serialize(const Element& e);

// @A, @B, @C, @r, @id.
std::optional<Element> named_element(std::string_view name);

json to_json(const SupportSet& s);
json to_json(const InvariantProfile& p);

json to_json(const Automorphism& a);
// `like` fixes the carrier of "id".
Automorphism automorphism_from_json(const json& j, const Element& like,
                                    const std::string& where = "/aut");

json to_json(const SeparationCertificate& c);
SeparationCertificate certificate_from_json(const json& j);

}  // namespace thompson
