#pragma once

#include "peakqsym/composition.hpp"
#include "peakqsym/qsym.hpp"
#include "peakqsym/tableau.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace peakqsym {

// Insertion-ordered JSON, so emitted objects keep the documented key order.
using JsonValue = nlohmann::ordered_json;

// Schemas (all parsers throw std::invalid_argument on malformed input):
//   composition  [3,2,3]
//   tableau      {"shape":[...], "rows":[[entry,...],...]}   rows bottom to top;
//                an entry is an integer, or a string like "5'" for a marked one
//   element      {"degree":n, "basis":"M"|"F"|"K",
//                 "terms":[{"composition":[...], "coeff":c}, ...]}
//                terms in canonical composition order; a coefficient is emitted
//                as a JSON integer when it fits in 64 bits and as a decimal
//                string otherwise (parsers accept either form at any size)

JsonValue composition_to_json(const Composition& alpha);
Composition composition_from_json(const JsonValue& j);

JsonValue coeff_to_json(const Integer& c);
Integer coeff_from_json(const JsonValue& j);

JsonValue tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const JsonValue& j);

JsonValue element_to_json(const QSymElement& e);
QSymElement element_from_json(const JsonValue& j);

// The element schema with a caller-chosen basis tag, for term maps that are
// not expressed in one of the three linear bases (e.g. tag "PYQS" for the
// expansion of a quasisymmetric Schur Q-function into peak Young ones).
JsonValue terms_to_json(int degree, std::string_view basis_tag, const TermMap& terms);

// Compact single-line text round-trips of the schemas above.
std::string tableau_to_json_text(const Tableau& t);
Tableau tableau_from_json_text(const std::string& text);
std::string element_to_json_text(const QSymElement& e);
QSymElement element_from_json_text(const std::string& text);

// Parse arbitrary JSON text, rethrowing parse errors as std::invalid_argument.
JsonValue parse_json_text(const std::string& text);

}  // namespace peakqsym
