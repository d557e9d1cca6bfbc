#pragma once

#include <nlohmann/json_fwd.hpp>

#include "carleson/instance.hpp"
#include "carleson/sparse.hpp"

namespace carleson {

// Exact rational from a JSON value: "p/q" or decimal strings, or integer
// numbers. Floating-point numbers are rejected to keep parsing exact.
Rat rat_from_json(const nlohmann::json& j);

Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);

nlohmann::json to_json(const Collection& c, const PhiWitness& w);
nlohmann::json to_json(const Collection& c, const Selection& w);
nlohmann::json to_json(const Collection& c, const BoxRealization& w);
nlohmann::json to_json(const Certificate& cert);

// Witness files are recognized by their payload key ("phi", "selection" or
// "boxes").
enum class WitnessKind { phi, selection, boxes };
WitnessKind witness_kind(const nlohmann::json& j);
PhiWitness phi_from_json(const Collection& c, const nlohmann::json& j);
Selection selection_from_json(const Collection& c, const nlohmann::json& j);
BoxRealization realization_from_json(const Collection& c,
                                     const nlohmann::json& j);

}  // namespace carleson
