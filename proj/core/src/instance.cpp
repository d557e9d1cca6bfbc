#include "carleson/instance.hpp"

namespace carleson {

Collection build(const Instance& inst) {
    switch (inst.kind) {
        case Instance::Kind::atoms: {
            if (inst.sets.empty()) throw Error("atoms instance needs a set list");
            std::vector<std::pair<std::string, Rat>> sets;
            sets.reserve(inst.sets.size());
            for (const auto& s : inst.sets) {
                Rat w = 0;
                if (s.weight) {
                    w = *s.weight;
                } else {
                    // default weight is the derived measure mu(Q)
                    for (const auto& a : inst.atoms)
                        for (const auto& id : a.signature)
                            if (id == s.id) w += a.measure;
                }
                sets.emplace_back(s.id, w);
            }
            std::vector<std::pair<std::vector<std::string>, Rat>> atoms;
            atoms.reserve(inst.atoms.size());
            for (const auto& a : inst.atoms)
                atoms.emplace_back(a.signature, a.measure);
            Collection c = build_from_atoms(sets, atoms);
            for (std::size_t i = 0; i < inst.sets.size(); ++i)
                c.sets[i].label = inst.sets[i].label;
            return c;
        }
        case Instance::Kind::dyadic:
        case Instance::Kind::boxes: {
            bool dyadic = inst.kind == Instance::Kind::dyadic;
            std::size_t n = dyadic ? inst.cubes.size() : inst.boxes.size();
            std::vector<std::string> ids;
            std::vector<Rat> weights;
            if (!inst.sets.empty()) {
                if (inst.sets.size() != n)
                    throw Error("set list does not match geometry count");
                bool any_weight = false;
                for (const auto& s : inst.sets) {
                    ids.push_back(s.id);
                    if (s.weight) any_weight = true;
                }
                if (any_weight) {
                    for (std::size_t i = 0; i < n; ++i) {
                        const auto& s = inst.sets[i];
                        if (s.weight)
                            weights.push_back(*s.weight);
                        else
                            weights.push_back(dyadic ? inst.cubes[i].volume()
                                                     : inst.boxes[i].volume());
                    }
                }
            }
            Collection c = dyadic ? build_from_dyadic(inst.cubes, weights, ids)
                                  : build_from_boxes(inst.boxes, weights, ids);
            for (std::size_t i = 0; i < inst.sets.size(); ++i)
                c.sets[i].label = inst.sets[i].label;
            return c;
        }
    }
    throw Error("unknown instance kind");
}

}  // namespace carleson
