#pragma once

#include "opcyl/presentation.hpp"

#include "json.hpp"

#include <functional>
#include <optional>

namespace opcyl {

using Resolver = std::function<std::optional<int>(const std::string&)>;

Resolver presentation_resolver(const Presentation& p);

// Element JSON:
// {"arity":n,"degree":d,"terms":[{"coeff":"<decimal>","tree":<node>}]}
// node = {"label":"<marker>:<name>/<arity>","children":[node|{"leaf":k}...]}
nlohmann::ordered_json element_to_json(const World& w, const Element& e);
Element element_from_json(const World& w, const Resolver& resolve, const nlohmann::json& j);

// LaTeX: the labeled-tree picture for small monomials, the nested
// composition expression otherwise (or always when trees = false).
std::string element_to_latex(const World& w, const Element& e, bool trees = true);

// One expression grammar for the CLI and presentation files:
// generators (with i0:/i1:/sigma: prefixes), id, oK for compositions,
// braces {..,..}, integer scalars, + and -, parentheses.
Element parse_element(const World& w, const Resolver& resolve, const std::string& src);

// Presentation file:
// {"name": "...", "base": "initial|assoc|lambda-assoc|uassoc",
//  "generators": [{"name": "x", "arity": 2, "degree": 1, "stage": 0,
//                  "boundary": "<expression>"}, ...]}
// Boundaries use the expression grammar over the declared generators and
// the base symbols (m_2, m_3, ..., u).
Presentation load_presentation(const nlohmann::json& j);
Presentation load_presentation_file(const std::string& path);

} // namespace opcyl
