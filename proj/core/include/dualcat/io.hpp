#pragma once

#include <string>

#include "dualcat/dpr.hpp"
#include "dualcat/homs.hpp"
#include "dualcat/sigcat.hpp"

namespace dualcat {

// {"dom":{"len":k,"plus":[..]},"cod":{..},"A":[..],"B":[..]} with 1-based
// ascending position arrays. Parsing validates the morphism; malformed text
// throws ConfigError, a well-formed but invalid morphism ValidationError.
std::string morphism_to_json(const DiagMorphism& f);
DiagMorphism morphism_from_json(const std::string& text);

// The same layout with a signature descriptor and words spelled as letter
// arrays: {"sig":"..","dom":["x",..],"cod":[..],"A":[..],"B":[..]}.
std::string sig_morphism_to_json(const SigMorphism& f);
SigMorphism sig_morphism_from_json(const std::string& text);

// {"claim":..,"instance":..,"expected":..,"actual":..,"pass":..}
std::string report_to_json(const CheckReport& r);

}  // namespace dualcat
