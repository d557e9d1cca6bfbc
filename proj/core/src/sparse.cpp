#include "carleson/sparse.hpp"

#include <algorithm>
#include <unordered_map>

#include "carleson/carleson.hpp"

namespace carleson {

namespace {

struct Solved {
    Rat lambda;
    FlowNetwork net;
    Flow flow;
};

Solved solve_flow(const Collection& c, const std::optional<Rat>& lambda_opt) {
    if (c.sets.empty()) throw Error("empty collection");
    Rat lambda = lambda_opt ? *lambda_opt : carleson_constant(c).lambda;
    if (lambda <= 0) throw Error("lambda must be positive");

    FlowNetwork net = build_network(c, lambda);
    Flow flow = max_flow(net);

    Rat demand = 0;
    for (const auto& s : c.sets) demand += s.weight / lambda;
    if (flow.value != demand) {
        // Max flow falls short of the total demand, so the minimum cut is
        // strictly below the all-sink-edges cut; the sets stranded on the
        // sink side violate the Carleson condition at this lambda.
        Cut cut = min_cut(net, flow);
        Certificate cert;
        std::vector<std::string> ids;
        for (int k = 0; k < net.num_set_nodes; ++k)
            if (!cut.in_source_side[net.set_node(k)])
                ids.push_back(c.sets[net.set_of[k]].id);
        cert.subcollection = ids;
        cert.weight_sum = 0;
        for (const auto& id : ids) cert.weight_sum += c.weight(c.set_index(id));
        cert.union_measure = c.union_measure(ids);
        cert.ratio = cert.weight_sum / cert.union_measure;
        throw InfeasibleLambda(lambda, std::move(cert));
    }
    return {std::move(lambda), std::move(net), std::move(flow)};
}

// Applies fn(atom_index, set_index, flow_amount) to every positive
// atom-to-set flow.
template <class Fn>
void for_each_transfer(const Solved& s, Fn&& fn) {
    for (std::size_t i = 0; i < s.net.edges.size(); ++i) {
        const FlowEdge& e = s.net.edges[i];
        if (!s.net.is_atom_node(e.from) || !s.net.is_set_node(e.to)) continue;
        if (s.flow.edge_flow[i] == 0) continue;
        int atom = s.net.atom_of[e.from - 1];
        int set = s.net.set_of[e.to - 1 - s.net.num_atom_nodes];
        fn(atom, set, s.flow.edge_flow[i]);
    }
}

}  // namespace

PhiWitness construct_phi(const Collection& c,
                         const std::optional<Rat>& lambda) {
    Solved s = solve_flow(c, lambda);
    PhiWitness w;
    w.lambda = s.lambda;
    w.coeffs.resize(c.sets.size());
    for_each_transfer(s, [&](int atom, int set, const Rat& amount) {
        w.coeffs[set][c.atoms[atom].id] = amount / c.atoms[atom].measure;
    });
    return w;
}

Selection construct_selection(const Collection& c,
                              const std::optional<Rat>& lambda) {
    Solved s = solve_flow(c, lambda);
    Selection sel;
    sel.lambda = s.lambda;
    sel.amounts.resize(c.sets.size());
    for_each_transfer(s, [&](int atom, int set, const Rat& amount) {
        sel.amounts[set].emplace_back(c.atoms[atom].id, amount);
    });
    return sel;
}

BoxRealization realize_boxes(const Collection& c, const Selection& sel) {
    if (!c.has_geometry())
        throw Error("geometric realization needs a box-built instance");
    if (sel.amounts.size() != c.sets.size())
        throw Error("selection does not match collection");
    const int d = c.dim;

    std::unordered_map<std::string, int> atom_index;
    for (std::size_t a = 0; a < c.atoms.size(); ++a)
        atom_index[c.atoms[a].id] = static_cast<int>(a);

    // per atom: (set index, amount), in set order
    std::vector<std::vector<std::pair<int, Rat>>> per_atom(c.atoms.size());
    for (std::size_t q = 0; q < sel.amounts.size(); ++q) {
        for (const auto& [atom_id, amount] : sel.amounts[q]) {
            auto it = atom_index.find(atom_id);
            if (it == atom_index.end())
                throw Error("selection references unknown atom '" + atom_id + "'");
            if (amount < 0) throw Error("negative selection amount");
            if (amount > 0)
                per_atom[it->second].emplace_back(static_cast<int>(q), amount);
        }
    }

    BoxRealization out;
    out.lambda = sel.lambda;
    out.pieces.resize(c.sets.size());
    for (std::size_t a = 0; a < c.atoms.size(); ++a) {
        auto& allocs = per_atom[a];
        if (allocs.empty()) continue;
        std::sort(allocs.begin(), allocs.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        Rat total = 0;
        for (const auto& [q, amount] : allocs) total += amount;
        if (total > c.atoms[a].measure)
            throw Error("selection amounts exceed the measure of atom '" +
                        c.atoms[a].id + "'");

        const auto& cells = c.atom_cells[a];
        std::size_t cell = 0;
        Rat cursor = cells.empty() ? Rat(0) : cells[0].low[0];
        for (const auto& [q, amount] : allocs) {
            Rat need = amount;
            while (need > 0) {
                if (cell >= cells.size())
                    throw Error("internal: atom cells exhausted");
                const Box& box = cells[cell];
                Rat cross = 1;
                for (int k = 1; k < d; ++k) cross *= box.high[k] - box.low[k];
                Rat avail = (box.high[0] - cursor) * cross;
                Box piece = box;
                piece.low[0] = cursor;
                if (avail <= need) {
                    need -= avail;
                    ++cell;
                    if (cell < cells.size()) cursor = cells[cell].low[0];
                } else {
                    Rat width = need / cross;
                    piece.high[0] = cursor + width;
                    cursor += width;
                    need = 0;
                }
                if (piece.low[0] < piece.high[0])
                    out.pieces[q].push_back(std::move(piece));
            }
        }
    }
    return out;
}

namespace {

void check_set_totals(const Collection& c, const Rat& lambda,
                      const std::vector<Rat>& totals, const char* name,
                      std::vector<std::string>& violations) {
    for (std::size_t q = 0; q < c.sets.size(); ++q) {
        if (totals[q] != c.sets[q].weight / lambda) {
            violations.push_back(std::string(name) + " for set '" +
                                 c.sets[q].id + "': got " + rat_str(totals[q]) +
                                 ", want " +
                                 rat_str(c.sets[q].weight / lambda));
        }
    }
}

}  // namespace

std::vector<std::string> verify_witness(const Collection& c,
                                        const PhiWitness& w) {
    std::vector<std::string> violations;
    if (w.lambda <= 0) return {"nonpositive lambda"};
    if (w.coeffs.size() != c.sets.size()) return {"set count mismatch"};

    std::unordered_map<std::string, int> atom_index;
    for (std::size_t a = 0; a < c.atoms.size(); ++a)
        atom_index[c.atoms[a].id] = static_cast<int>(a);

    std::vector<Rat> per_atom_sum(c.atoms.size(), Rat(0));
    std::vector<Rat> integrals(c.sets.size(), Rat(0));
    for (std::size_t q = 0; q < c.sets.size(); ++q) {
        for (const auto& [atom_id, coeff] : w.coeffs[q]) {
            auto it = atom_index.find(atom_id);
            if (it == atom_index.end()) {
                violations.push_back("unknown atom '" + atom_id + "'");
                continue;
            }
            int a = it->second;
            if (coeff < 0 || coeff > 1)
                violations.push_back("coefficient outside [0,1] for set '" +
                                     c.sets[q].id + "' on atom '" + atom_id + "'");
            const auto& sig = c.atoms[a].signature;
            if (coeff > 0 &&
                !std::binary_search(sig.begin(), sig.end(), static_cast<int>(q)))
                violations.push_back("support of phi leaves set '" +
                                     c.sets[q].id + "' on atom '" + atom_id + "'");
            per_atom_sum[a] += coeff;
            integrals[q] += coeff * c.atoms[a].measure;
        }
    }
    for (std::size_t a = 0; a < c.atoms.size(); ++a)
        if (per_atom_sum[a] > 1)
            violations.push_back("sum of phi exceeds 1 on atom '" +
                                 c.atoms[a].id + "'");
    check_set_totals(c, w.lambda, integrals, "integral", violations);
    return violations;
}

std::vector<std::string> verify_witness(const Collection& c,
                                        const Selection& w) {
    std::vector<std::string> violations;
    if (w.lambda <= 0) return {"nonpositive lambda"};
    if (w.amounts.size() != c.sets.size()) return {"set count mismatch"};

    std::unordered_map<std::string, int> atom_index;
    for (std::size_t a = 0; a < c.atoms.size(); ++a)
        atom_index[c.atoms[a].id] = static_cast<int>(a);

    std::vector<Rat> per_atom_sum(c.atoms.size(), Rat(0));
    std::vector<Rat> totals(c.sets.size(), Rat(0));
    for (std::size_t q = 0; q < c.sets.size(); ++q) {
        for (const auto& [atom_id, amount] : w.amounts[q]) {
            auto it = atom_index.find(atom_id);
            if (it == atom_index.end()) {
                violations.push_back("unknown atom '" + atom_id + "'");
                continue;
            }
            int a = it->second;
            if (amount < 0)
                violations.push_back("negative amount for set '" + c.sets[q].id +
                                     "'");
            const auto& sig = c.atoms[a].signature;
            if (amount > 0 &&
                !std::binary_search(sig.begin(), sig.end(), static_cast<int>(q)))
                violations.push_back("allocation outside set '" + c.sets[q].id +
                                     "' on atom '" + atom_id + "'");
            per_atom_sum[a] += amount;
            totals[q] += amount;
        }
    }
    for (std::size_t a = 0; a < c.atoms.size(); ++a)
        if (per_atom_sum[a] > c.atoms[a].measure)
            violations.push_back("allocations exceed the measure of atom '" +
                                 c.atoms[a].id + "'");
    check_set_totals(c, w.lambda, totals, "allocation total", violations);
    return violations;
}

namespace {

std::string cross_section_key(const Box& b) {
    std::string key;
    for (int k = 1; k < b.dim(); ++k)
        key += rat_str(b.low[k]) + ";" + rat_str(b.high[k]) + ";";
    return key;
}

// Disjointness of the pieces. Fast path: every piece produced by
// realize_boxes is a first-coordinate slab of a grid cell, so pieces in
// different grid columns are disjoint and pieces within a column reduce to
// a one-dimensional interval check. Pieces that do not match any column
// fall back to pairwise intersection tests.
void check_disjoint(const Collection& c, const BoxRealization& w,
                    std::vector<std::string>& violations) {
    std::unordered_map<std::string, std::vector<std::pair<Rat, Rat>>> columns;
    std::unordered_map<std::string, char> known_columns;
    for (const auto& cells : c.atom_cells)
        for (const auto& cell : cells) known_columns[cross_section_key(cell)] = 1;

    std::vector<const Box*> stragglers;
    for (const auto& pieces : w.pieces) {
        for (const auto& p : pieces) {
            std::string key = cross_section_key(p);
            if (known_columns.count(key))
                columns[key].emplace_back(p.low[0], p.high[0]);
            else
                stragglers.push_back(&p);
        }
    }
    for (auto& [key, intervals] : columns) {
        std::sort(intervals.begin(), intervals.end());
        for (std::size_t i = 1; i < intervals.size(); ++i) {
            if (intervals[i].first < intervals[i - 1].second) {
                violations.push_back("pieces overlap");
                return;
            }
        }
    }
    // Rare path: pieces that are not cell slabs are checked pairwise
    // against everything.
    if (!stragglers.empty()) {
        std::vector<const Box*> all;
        for (const auto& pieces : w.pieces)
            for (const auto& p : pieces) all.push_back(&p);
        for (const Box* a : stragglers) {
            for (const Box* b : all) {
                if (a == b) continue;
                if (a->intersects(*b)) {
                    violations.push_back("pieces overlap");
                    return;
                }
            }
        }
    }
}

}  // namespace

std::vector<std::string> verify_witness(const Collection& c,
                                        const BoxRealization& w) {
    std::vector<std::string> violations;
    if (w.lambda <= 0) return {"nonpositive lambda"};
    if (!c.has_geometry()) return {"collection has no box geometry"};
    if (w.pieces.size() != c.sets.size()) return {"set count mismatch"};

    std::vector<Rat> totals(c.sets.size(), Rat(0));
    for (std::size_t q = 0; q < c.sets.size(); ++q) {
        for (const auto& p : w.pieces[q]) {
            if (p.dim() != c.dim) {
                violations.push_back("piece dimension mismatch");
                continue;
            }
            if (!c.set_boxes[q].contains(p))
                violations.push_back("piece escapes set '" + c.sets[q].id + "'");
            totals[q] += p.volume();
        }
    }
    check_set_totals(c, w.lambda, totals, "piece volume", violations);
    check_disjoint(c, w, violations);
    return violations;
}

}  // namespace carleson
