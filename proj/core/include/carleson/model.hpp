#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "carleson/rational.hpp"

namespace carleson {

// One occurrence of a set Q in the collection. Occurrences are identified
// by id, so the same underlying set may appear several times with distinct
// ids. The weight defaults to the measure of the set.
struct SetOccurrence {
    std::string id;
    std::string label;
    Rat weight;
};

// One cell of the partition induced by the collection: the points lying in
// exactly the sets listed in the signature. Signatures are stored as sorted
// set indices into Collection::sets.
struct Atom {
    std::string id;
    std::vector<int> signature;
    Rat measure;
};

// Axis-parallel half-open box [low, high).
struct Box {
    std::vector<Rat> low;
    std::vector<Rat> high;

    int dim() const { return static_cast<int>(low.size()); }
    Rat volume() const;
    bool contains(const Box& inner) const;
    bool intersects(const Box& other) const;
};

// The dyadic cube 2^level * ([0,1)^d + offset).
struct DyadicCube {
    long level = 0;
    std::vector<long> offset;

    int dim() const { return static_cast<int>(offset.size()); }
    Box to_box() const;
    Rat volume() const;
};

// A finite collection of weighted sets, represented entirely through the
// atom partition and its measures. Immutable after construction; build via
// one of the builders below.
struct Collection {
    std::vector<SetOccurrence> sets;
    std::vector<Atom> atoms;
    std::vector<Rat> mu;  // derived mu(Q) per set index

    // Geometry, present only for box-built collections. atom_cells[a] holds
    // the grid cells making up atom a, in lexicographic order.
    int dim = 0;
    std::vector<Box> set_boxes;
    std::vector<std::vector<Box>> atom_cells;

    std::size_t size() const { return sets.size(); }
    bool has_geometry() const { return !atom_cells.empty(); }

    int set_index(const std::string& id) const;  // throws on unknown id
    const Rat& weight(int i) const { return sets[i].weight; }
    std::vector<std::string> ids(const std::vector<int>& indices) const;
    std::vector<int> indices(const std::vector<std::string>& ids) const;

    // mu of the union of the given occurrences; 0 for the empty list.
    Rat union_measure(const std::vector<std::string>& ids) const;
    Rat union_measure_mask(const std::vector<char>& mask) const;
    Rat total_measure() const;  // mu of the union of the whole collection
};

Collection build_from_atoms(
    const std::vector<std::pair<std::string, Rat>>& sets,
    const std::vector<std::pair<std::vector<std::string>, Rat>>& atoms);

// Weights and ids are optional; weights default to the cube volumes, ids to
// Q1..Qn. Duplicated cubes are kept as separate occurrences.
Collection build_from_dyadic(const std::vector<DyadicCube>& cubes,
                             const std::vector<Rat>& weights = {},
                             const std::vector<std::string>& ids = {});

// Coordinate-compresses the box endpoints and groups grid cells by the set
// of boxes containing them. Keeps the grid cells for later geometric
// realization of sparse witnesses.
Collection build_from_boxes(const std::vector<Box>& boxes,
                            const std::vector<Rat>& weights = {},
                            const std::vector<std::string>& ids = {});

// Recovers the atom measures from an evaluation oracle A -> mu(union A),
// by induction on signature size. Uses one oracle call per signature plus
// one for the full union. The signatures must be exactly the partition of
// the collection the oracle describes.
std::vector<Rat> atom_measures_from_oracle(
    const std::vector<std::vector<std::string>>& signatures,
    const std::function<Rat(const std::vector<std::string>&)>& oracle);

}  // namespace carleson
