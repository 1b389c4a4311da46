#pragma once

#include <string>

#include "json.hpp"
#include "maxab/classify.hpp"
#include "maxab/pairing.hpp"
#include "maxab/star_verifier.hpp"

namespace maxab {

using Json = nlohmann::ordered_json;

// Encoders. Phases are "a/b" strings for exp(2 pi i a/b); big orders are decimal strings.
Json to_json(const Monomial& m);
Json to_json(const TorusDirection& t);
Json to_json(const AbelianPresentation& f);
Json to_json(const PairingTable& t);
Json to_json(const Msms& m);
Json to_json(const ClassInvariant& inv);
Json to_json(const FixedAlgebraReport& r);
Json to_json(const WeylDescription& w);

// Decoders; malformed input throws ValidationError.
Monomial monomial_from_json(const Json& j);
TorusDirection torus_from_json(const Json& j);
AbelianPresentation presentation_from_json(const Json& j);
Msms msms_from_json(const Json& j);
ClassInvariant invariant_from_json(const Json& j);

/// Parses one JSON document, mapping parse errors to ValidationError.
Json parse_json(const std::string& text);

/// JSON Schemas of the persisted types, keyed by type name.
Json schemas();

}  // namespace maxab
