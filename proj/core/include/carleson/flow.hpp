#pragma once

#include <string>
#include <vector>

#include "carleson/model.hpp"

namespace carleson {

// Capacity of a network edge: a nonnegative rational or the distinct
// infinity marker. Infinity is never approximated by a large number.
struct Capacity {
    bool infinite = false;
    Rat value;

    static Capacity inf() { return {true, Rat(0)}; }
    static Capacity fin(Rat v) { return {false, std::move(v)}; }
};

struct FlowEdge {
    int from = 0;
    int to = 0;
    Capacity cap;
};

// The bipartite-style network built from a collection and a constant:
// source -> atom edges carry the atom measures, atom -> set edges are
// infinite, set -> sink edges carry weight(Q) / lambda.
//
// Node layout: 0 = s, then one node per kept atom, then one node per kept
// set, then t. Construction order is deterministic (atoms then sets, each
// in input order), as is the edge order.
struct FlowNetwork {
    int num_atom_nodes = 0;
    int num_set_nodes = 0;
    std::vector<FlowEdge> edges;
    std::vector<int> atom_of;  // original atom index per atom node
    std::vector<int> set_of;   // original set index per set node

    int node_count() const { return num_atom_nodes + num_set_nodes + 2; }
    int source() const { return 0; }
    int sink() const { return num_atom_nodes + num_set_nodes + 1; }
    int atom_node(int k) const { return 1 + k; }
    int set_node(int k) const { return 1 + num_atom_nodes + k; }
    bool is_atom_node(int v) const { return v >= 1 && v <= num_atom_nodes; }
    bool is_set_node(int v) const {
        return v > num_atom_nodes && v < sink();
    }
    std::string node_name(int v, const Collection& c) const;
};

// Builds the network for the given constant. When a domain mask over set
// indices is given, only domain sets are kept; atom signatures are
// restricted to the domain and atoms left with empty signatures are
// omitted.
FlowNetwork build_network(const Collection& c, const Rat& lambda,
                          const std::vector<char>* domain_mask = nullptr);

struct Flow {
    std::vector<Rat> edge_flow;  // parallel to FlowNetwork::edges
    Rat value;
};

// Exact maximum flow (Dinic's blocking-flow method). Capacities are
// internally rescaled to a common denominator so all augmentations are
// integral; the result is converted back to rationals.
Flow max_flow(const FlowNetwork& net);

struct Cut {
    std::vector<char> in_source_side;  // per node
    Capacity capacity;
};

// Minimum cut from a maximum flow: the source side is the set of nodes
// reachable from s in the residual graph. Throws if the flow is not
// maximum (sink still reachable).
Cut min_cut(const FlowNetwork& net, const Flow& f);

// Debug dump in DOT format; includes flow amounts when given.
std::string to_dot(const FlowNetwork& net, const Collection& c,
                   const Flow* f = nullptr);

}  // namespace carleson
