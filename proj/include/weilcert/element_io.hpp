#pragma once

// Text and JSON forms of field elements.
//
//   rat  := int [ "/" posint ]
//   quad := rat | rat ("+"|"-") rat "*" "s"        (s stands for sqrt D)
//
// Tower elements serialize as a JSON array of quad strings indexed by the
// power of zeta.

#include <string>
#include <string_view>

#include <json.hpp>

#include "weilcert/field.hpp"

namespace weilcert {

Quad parse_quad(std::string_view text, long d);
/// Parses a quad string into the tower; throws ParseError with a position.
TowerElt parse_element(std::string_view text, const FieldRef& field);

nlohmann::json tower_to_json(const TowerElt& x);
TowerElt tower_from_json(const nlohmann::json& j, const FieldRef& field);

/// Quad string when the element lies in Q(sqrt D), otherwise the array form.
nlohmann::json element_to_json(const TowerElt& x);
TowerElt element_from_json(const nlohmann::json& j, const FieldRef& field);

}  // namespace weilcert
