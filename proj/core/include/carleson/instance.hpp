#pragma once

#include <optional>
#include <string>
#include <vector>

#include "carleson/model.hpp"

namespace carleson {

// The raw, serializable description of a problem instance, mirroring the
// JSON instance format. Build a Collection from it with build().
struct Instance {
    enum class Kind { atoms, dyadic, boxes };

    struct Set {
        std::string id;
        std::optional<Rat> weight;  // defaults to mu(Q) when absent
        std::string label;
    };

    struct AtomSpec {
        std::vector<std::string> signature;
        Rat measure;
    };

    Kind kind = Kind::atoms;
    std::vector<Set> sets;  // may be empty for dyadic/boxes (ids default Q1..Qn)
    std::vector<AtomSpec> atoms;
    std::vector<DyadicCube> cubes;
    std::vector<Box> boxes;
};

Collection build(const Instance& inst);

}  // namespace carleson
