#include "carleson/json_io.hpp"

#include <nlohmann/json.hpp>

namespace carleson {

using nlohmann::json;

Rat rat_from_json(const json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer())
        return Rat(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned())
        return Rat(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_number_float())
        throw Error("floating-point literal rejected; use \"p/q\" or a "
                    "decimal string for exactness");
    throw Error("expected a rational value");
}

namespace {

json rat_to_json(const Rat& r) { return rat_str(r); }

std::vector<Rat> rat_vector(const json& j) {
    if (!j.is_array()) throw Error("expected an array of rationals");
    std::vector<Rat> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(rat_from_json(v));
    return out;
}

json rat_vector_to_json(const std::vector<Rat>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(rat_to_json(r));
    return out;
}

}  // namespace

Instance instance_from_json(const json& j) {
    if (!j.is_object()) throw Error("instance must be a JSON object");
    if (!j.contains("kind")) throw Error("instance is missing \"kind\"");
    std::string kind = j.at("kind").get<std::string>();

    Instance inst;
    if (j.contains("sets")) {
        for (const auto& s : j.at("sets")) {
            Instance::Set set;
            set.id = s.at("id").get<std::string>();
            if (s.contains("weight")) set.weight = rat_from_json(s.at("weight"));
            if (s.contains("label")) set.label = s.at("label").get<std::string>();
            inst.sets.push_back(std::move(set));
        }
    }

    if (kind == "atoms") {
        inst.kind = Instance::Kind::atoms;
        if (!j.contains("atoms")) throw Error("atoms instance needs \"atoms\"");
        for (const auto& a : j.at("atoms")) {
            Instance::AtomSpec spec;
            for (const auto& id : a.at("signature"))
                spec.signature.push_back(id.get<std::string>());
            spec.measure = rat_from_json(a.at("measure"));
            inst.atoms.push_back(std::move(spec));
        }
    } else if (kind == "dyadic") {
        inst.kind = Instance::Kind::dyadic;
        if (!j.contains("cubes")) throw Error("dyadic instance needs \"cubes\"");
        for (const auto& cj : j.at("cubes")) {
            DyadicCube cube;
            cube.level = cj.at("level").get<long>();
            for (const auto& k : cj.at("offset"))
                cube.offset.push_back(k.get<long>());
            inst.cubes.push_back(std::move(cube));
        }
    } else if (kind == "boxes") {
        inst.kind = Instance::Kind::boxes;
        if (!j.contains("boxes")) throw Error("boxes instance needs \"boxes\"");
        for (const auto& bj : j.at("boxes")) {
            Box b;
            b.low = rat_vector(bj.at("low"));
            b.high = rat_vector(bj.at("high"));
            inst.boxes.push_back(std::move(b));
        }
    } else {
        throw Error("unknown instance kind: '" + kind + "'");
    }
    return inst;
}

json instance_to_json(const Instance& inst) {
    json j;
    switch (inst.kind) {
        case Instance::Kind::atoms:
            j["kind"] = "atoms";
            break;
        case Instance::Kind::dyadic:
            j["kind"] = "dyadic";
            break;
        case Instance::Kind::boxes:
            j["kind"] = "boxes";
            break;
    }
    if (!inst.sets.empty()) {
        json sets = json::array();
        for (const auto& s : inst.sets) {
            json sj;
            sj["id"] = s.id;
            if (s.weight) sj["weight"] = rat_to_json(*s.weight);
            if (!s.label.empty()) sj["label"] = s.label;
            sets.push_back(std::move(sj));
        }
        j["sets"] = std::move(sets);
    }
    if (inst.kind == Instance::Kind::atoms) {
        json atoms = json::array();
        for (const auto& a : inst.atoms)
            atoms.push_back(
                {{"signature", a.signature}, {"measure", rat_to_json(a.measure)}});
        j["atoms"] = std::move(atoms);
    } else if (inst.kind == Instance::Kind::dyadic) {
        json cubes = json::array();
        for (const auto& cube : inst.cubes)
            cubes.push_back({{"level", cube.level}, {"offset", cube.offset}});
        j["cubes"] = std::move(cubes);
    } else {
        json boxes = json::array();
        for (const auto& b : inst.boxes)
            boxes.push_back({{"low", rat_vector_to_json(b.low)},
                             {"high", rat_vector_to_json(b.high)}});
        j["boxes"] = std::move(boxes);
    }
    return j;
}

json to_json(const Collection& c, const PhiWitness& w) {
    json j;
    j["lambda"] = rat_to_json(w.lambda);
    json phi = json::array();
    for (std::size_t q = 0; q < w.coeffs.size(); ++q) {
        json entry;
        entry["set"] = c.sets[q].id;
        json atoms = json::array();
        for (const auto& [atom_id, coeff] : w.coeffs[q])
            atoms.push_back({{"atom", atom_id}, {"coeff", rat_to_json(coeff)}});
        entry["atoms"] = std::move(atoms);
        phi.push_back(std::move(entry));
    }
    j["phi"] = std::move(phi);
    return j;
}

json to_json(const Collection& c, const Selection& w) {
    json j;
    j["lambda"] = rat_to_json(w.lambda);
    json sel = json::array();
    for (std::size_t q = 0; q < w.amounts.size(); ++q) {
        json entry;
        entry["set"] = c.sets[q].id;
        json atoms = json::array();
        for (const auto& [atom_id, amount] : w.amounts[q])
            atoms.push_back({{"atom", atom_id}, {"amount", rat_to_json(amount)}});
        entry["atoms"] = std::move(atoms);
        sel.push_back(std::move(entry));
    }
    j["selection"] = std::move(sel);
    return j;
}

json to_json(const Collection& c, const BoxRealization& w) {
    json j;
    j["lambda"] = rat_to_json(w.lambda);
    json sets = json::array();
    for (std::size_t q = 0; q < w.pieces.size(); ++q) {
        json entry;
        entry["set"] = c.sets[q].id;
        json boxes = json::array();
        for (const auto& b : w.pieces[q])
            boxes.push_back({{"low", rat_vector_to_json(b.low)},
                             {"high", rat_vector_to_json(b.high)}});
        entry["boxes"] = std::move(boxes);
        sets.push_back(std::move(entry));
    }
    j["boxes"] = std::move(sets);
    return j;
}

json to_json(const Certificate& cert) {
    return {{"subcollection", cert.subcollection},
            {"weight_sum", rat_to_json(cert.weight_sum)},
            {"union_measure", rat_to_json(cert.union_measure)},
            {"ratio", rat_to_json(cert.ratio)}};
}

WitnessKind witness_kind(const json& j) {
    if (j.contains("phi")) return WitnessKind::phi;
    if (j.contains("selection")) return WitnessKind::selection;
    if (j.contains("boxes")) return WitnessKind::boxes;
    throw Error("witness file has no \"phi\", \"selection\" or \"boxes\" key");
}

namespace {

template <class Fn>
void parse_per_set(const Collection& c, const json& arr, Fn&& fn) {
    if (!arr.is_array()) throw Error("expected a witness array");
    for (const auto& entry : arr) {
        int q = c.set_index(entry.at("set").get<std::string>());
        fn(q, entry);
    }
}

}  // namespace

PhiWitness phi_from_json(const Collection& c, const json& j) {
    PhiWitness w;
    w.lambda = rat_from_json(j.at("lambda"));
    w.coeffs.resize(c.sets.size());
    parse_per_set(c, j.at("phi"), [&](int q, const json& entry) {
        for (const auto& a : entry.at("atoms"))
            w.coeffs[q][a.at("atom").get<std::string>()] =
                rat_from_json(a.at("coeff"));
    });
    return w;
}

Selection selection_from_json(const Collection& c, const json& j) {
    Selection w;
    w.lambda = rat_from_json(j.at("lambda"));
    w.amounts.resize(c.sets.size());
    parse_per_set(c, j.at("selection"), [&](int q, const json& entry) {
        for (const auto& a : entry.at("atoms"))
            w.amounts[q].emplace_back(a.at("atom").get<std::string>(),
                                      rat_from_json(a.at("amount")));
    });
    return w;
}

BoxRealization realization_from_json(const Collection& c, const json& j) {
    BoxRealization w;
    w.lambda = rat_from_json(j.at("lambda"));
    w.pieces.resize(c.sets.size());
    parse_per_set(c, j.at("boxes"), [&](int q, const json& entry) {
        for (const auto& bj : entry.at("boxes")) {
            Box b;
            b.low = rat_vector(bj.at("low"));
            b.high = rat_vector(bj.at("high"));
            w.pieces[q].push_back(std::move(b));
        }
    });
    return w;
}

}  // namespace carleson
