// JSON persistence for state sets. Amplitudes are serialized as [re, im]
// pairs with enough digits to round-trip double precision exactly.
#pragma once

#include <string>

#include "nlops/states.hpp"

namespace nlops {

// Schema:
//   {"m": int, "n": int, "family": string|null,
//    "states": [{"label": str, "a": [[re,im],...], "b": [[re,im],...]}]}
std::string save_json(const StateSet& s);

// Throws std::invalid_argument on malformed JSON, dimension inconsistency,
// empty amplitude vectors, or non-finite numbers.
StateSet load_json(const std::string& text);

StateSet load_json_file(const std::string& path);
void save_json_file(const StateSet& s, const std::string& path);

}  // namespace nlops
