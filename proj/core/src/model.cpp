#include "carleson/model.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace carleson {

Rat Box::volume() const {
    Rat v = 1;
    for (int i = 0; i < dim(); ++i) v *= high[i] - low[i];
    return v;
}

bool Box::contains(const Box& inner) const {
    if (inner.dim() != dim()) return false;
    for (int i = 0; i < dim(); ++i)
        if (inner.low[i] < low[i] || inner.high[i] > high[i]) return false;
    return true;
}

bool Box::intersects(const Box& other) const {
    for (int i = 0; i < dim(); ++i)
        if (other.high[i] <= low[i] || high[i] <= other.low[i]) return false;
    return true;
}

Box DyadicCube::to_box() const {
    Rat side = pow2(level);
    Box b;
    b.low.reserve(offset.size());
    b.high.reserve(offset.size());
    for (long k : offset) {
        b.low.push_back(side * k);
        b.high.push_back(side * (k + 1));
    }
    return b;
}

Rat DyadicCube::volume() const { return pow2(level * dim()); }

int Collection::set_index(const std::string& id) const {
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i].id == id) return static_cast<int>(i);
    throw Error("unknown set id: '" + id + "'");
}

std::vector<std::string> Collection::ids(const std::vector<int>& indices) const {
    std::vector<std::string> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(sets.at(i).id);
    return out;
}

std::vector<int> Collection::indices(const std::vector<std::string>& id_list) const {
    std::vector<int> out;
    out.reserve(id_list.size());
    for (const auto& id : id_list) out.push_back(set_index(id));
    std::sort(out.begin(), out.end());
    return out;
}

Rat Collection::union_measure(const std::vector<std::string>& id_list) const {
    std::vector<char> mask(sets.size(), 0);
    for (const auto& id : id_list) mask[set_index(id)] = 1;
    return union_measure_mask(mask);
}

Rat Collection::union_measure_mask(const std::vector<char>& mask) const {
    Rat total = 0;
    for (const auto& atom : atoms) {
        for (int q : atom.signature) {
            if (mask[q]) {
                total += atom.measure;
                break;
            }
        }
    }
    return total;
}

Rat Collection::total_measure() const {
    Rat total = 0;
    for (const auto& atom : atoms) total += atom.measure;
    return total;
}

namespace {

void check_sets(const std::vector<SetOccurrence>& sets) {
    std::unordered_map<std::string, int> seen;
    for (const auto& s : sets) {
        if (s.id.empty()) throw Error("empty set id");
        if (!seen.emplace(s.id, 1).second)
            throw Error("duplicate set id: '" + s.id + "'");
        if (s.weight <= 0)
            throw Error("nonpositive weight for set '" + s.id + "'");
    }
}

// Shared final validation: positive-measure atoms only, derived mu, every
// set covered by at least one atom.
void finalize(Collection& c) {
    check_sets(c.sets);
    c.mu.assign(c.sets.size(), Rat(0));
    for (const auto& atom : c.atoms)
        for (int q : atom.signature) c.mu[q] += atom.measure;
    for (std::size_t i = 0; i < c.sets.size(); ++i)
        if (c.mu[i] <= 0)
            throw Error("set '" + c.sets[i].id + "' is covered by no atom");
}

std::string atom_name(std::size_t i) { return "A" + std::to_string(i); }

}  // namespace

Collection build_from_atoms(
    const std::vector<std::pair<std::string, Rat>>& sets,
    const std::vector<std::pair<std::vector<std::string>, Rat>>& atoms) {
    Collection c;
    c.sets.reserve(sets.size());
    for (const auto& [id, w] : sets) c.sets.push_back({id, "", w});
    check_sets(c.sets);

    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < c.sets.size(); ++i)
        index[c.sets[i].id] = static_cast<int>(i);

    std::map<std::vector<int>, int> seen_signatures;
    for (const auto& [sig_ids, measure] : atoms) {
        if (sig_ids.empty()) throw Error("empty atom signature");
        std::vector<int> sig;
        sig.reserve(sig_ids.size());
        for (const auto& id : sig_ids) {
            auto it = index.find(id);
            if (it == index.end())
                throw Error("unknown set id in signature: '" + id + "'");
            sig.push_back(it->second);
        }
        std::sort(sig.begin(), sig.end());
        if (std::adjacent_find(sig.begin(), sig.end()) != sig.end())
            throw Error("repeated set id within one signature");
        if (!seen_signatures.emplace(sig, 1).second)
            throw Error("duplicate atom signature");
        if (measure < 0) throw Error("negative atom measure");
        if (measure == 0) continue;  // atoms are identified up to null sets
        c.atoms.push_back({atom_name(c.atoms.size()), std::move(sig), measure});
    }
    finalize(c);
    return c;
}

namespace {

std::vector<std::string> default_ids(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back("Q" + std::to_string(i + 1));
    return out;
}

}  // namespace

Collection build_from_dyadic(const std::vector<DyadicCube>& cubes,
                             const std::vector<Rat>& weights,
                             const std::vector<std::string>& ids) {
    if (cubes.empty()) throw Error("empty cube list");
    int d = cubes[0].dim();
    if (d < 1) throw Error("cube dimension must be at least 1");
    for (const auto& cube : cubes)
        if (cube.dim() != d) throw Error("cube dimension mismatch");
    if (!weights.empty() && weights.size() != cubes.size())
        throw Error("weight count does not match cube count");
    if (!ids.empty() && ids.size() != cubes.size())
        throw Error("id count does not match cube count");

    const std::size_t n = cubes.size();
    std::vector<std::string> set_ids = ids.empty() ? default_ids(n) : ids;

    Collection c;
    for (std::size_t i = 0; i < n; ++i)
        c.sets.push_back(
            {set_ids[i], "", weights.empty() ? cubes[i].volume() : weights[i]});
    check_sets(c.sets);

    // Deduplicate geometrically equal cubes; each unique cube contributes at
    // most one atom, so |P0| <= |F|.
    std::map<std::pair<long, std::vector<long>>, int> unique_index;
    std::vector<DyadicCube> unique;
    std::vector<Box> unique_boxes;
    for (const auto& cube : cubes) {
        auto key = std::make_pair(cube.level, cube.offset);
        if (unique_index.emplace(key, static_cast<int>(unique.size())).second) {
            unique.push_back(cube);
            unique_boxes.push_back(cube.to_box());
        }
    }

    const std::size_t u = unique.size();
    // contains[i][j]: unique cube j is contained in unique cube i
    std::vector<std::vector<char>> contains(u, std::vector<char>(u, 0));
    for (std::size_t i = 0; i < u; ++i)
        for (std::size_t j = 0; j < u; ++j)
            if (i != j) contains[i][j] = unique_boxes[i].contains(unique_boxes[j]);

    for (std::size_t i = 0; i < u; ++i) {
        // Atom of cube i: its volume minus the maximal strict subcubes.
        Rat measure = unique[i].volume();
        for (std::size_t j = 0; j < u; ++j) {
            if (!contains[i][j]) continue;
            bool maximal = true;
            for (std::size_t k = 0; k < u && maximal; ++k)
                if (k != j && contains[i][k] && contains[k][j]) maximal = false;
            if (maximal) measure -= unique[j].volume();
        }
        if (measure == 0) continue;
        if (measure < 0) throw Error("internal: negative dyadic atom measure");
        std::vector<int> sig;
        for (std::size_t s = 0; s < n; ++s) {
            auto key = std::make_pair(cubes[s].level, cubes[s].offset);
            std::size_t us = unique_index.at(key);
            if (us == i || contains[us][i]) sig.push_back(static_cast<int>(s));
        }
        c.atoms.push_back({atom_name(c.atoms.size()), std::move(sig), measure});
    }
    finalize(c);
    return c;
}

Collection build_from_boxes(const std::vector<Box>& boxes,
                            const std::vector<Rat>& weights,
                            const std::vector<std::string>& ids) {
    if (boxes.empty()) throw Error("empty box list");
    const int d = boxes[0].dim();
    if (d < 1) throw Error("box dimension must be at least 1");
    for (const auto& b : boxes) {
        if (b.dim() != d || static_cast<int>(b.high.size()) != d)
            throw Error("box dimension mismatch");
        for (int i = 0; i < d; ++i)
            if (!(b.low[i] < b.high[i]))
                throw Error("box has empty extent in coordinate " +
                            std::to_string(i));
    }
    if (!weights.empty() && weights.size() != boxes.size())
        throw Error("weight count does not match box count");
    if (!ids.empty() && ids.size() != boxes.size())
        throw Error("id count does not match box count");

    const std::size_t n = boxes.size();
    std::vector<std::string> set_ids = ids.empty() ? default_ids(n) : ids;

    Collection c;
    c.dim = d;
    c.set_boxes = boxes;
    for (std::size_t i = 0; i < n; ++i)
        c.sets.push_back(
            {set_ids[i], "", weights.empty() ? boxes[i].volume() : weights[i]});
    check_sets(c.sets);

    // Coordinate compression per dimension.
    std::vector<std::vector<Rat>> grid(d);
    for (int k = 0; k < d; ++k) {
        for (const auto& b : boxes) {
            grid[k].push_back(b.low[k]);
            grid[k].push_back(b.high[k]);
        }
        std::sort(grid[k].begin(), grid[k].end());
        grid[k].erase(std::unique(grid[k].begin(), grid[k].end()), grid[k].end());
    }

    // Per dimension and grid slot, the bitset of boxes covering that slot.
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> cover(d);
    for (int k = 0; k < d; ++k) {
        std::size_t slots = grid[k].size() - 1;
        cover[k].assign(slots * words, 0);
        for (std::size_t b = 0; b < n; ++b) {
            auto lo = std::lower_bound(grid[k].begin(), grid[k].end(),
                                       boxes[b].low[k]) - grid[k].begin();
            auto hi = std::lower_bound(grid[k].begin(), grid[k].end(),
                                       boxes[b].high[k]) - grid[k].begin();
            for (auto s = lo; s < hi; ++s)
                cover[k][s * words + b / 64] |= std::uint64_t(1) << (b % 64);
        }
    }

    struct VecHash {
        std::size_t operator()(const std::vector<std::uint64_t>& v) const {
            std::size_t h = 0xcbf29ce484222325ull;
            for (auto w : v) {
                h ^= w;
                h *= 0x100000001b3ull;
            }
            return h;
        }
    };
    std::unordered_map<std::vector<std::uint64_t>, int, VecHash> atom_of;

    // Walk cells in lexicographic order, grouping by containment bitset.
    std::vector<std::size_t> slot_counts(d);
    for (int k = 0; k < d; ++k) slot_counts[k] = grid[k].size() - 1;
    std::vector<std::size_t> idx(d, 0);
    std::vector<std::uint64_t> sig_words(words);
    for (;;) {
        std::copy_n(&cover[0][idx[0] * words], words, sig_words.begin());
        for (int k = 1; k < d; ++k)
            for (std::size_t w = 0; w < words; ++w)
                sig_words[w] &= cover[k][idx[k] * words + w];
        bool empty = true;
        for (auto w : sig_words)
            if (w) empty = false;
        if (!empty) {
            Box cell;
            cell.low.reserve(d);
            cell.high.reserve(d);
            Rat vol = 1;
            for (int k = 0; k < d; ++k) {
                cell.low.push_back(grid[k][idx[k]]);
                cell.high.push_back(grid[k][idx[k] + 1]);
                vol *= cell.high[k] - cell.low[k];
            }
            auto [it, inserted] =
                atom_of.emplace(sig_words, static_cast<int>(c.atoms.size()));
            if (inserted) {
                std::vector<int> sig;
                for (std::size_t b = 0; b < n; ++b)
                    if (sig_words[b / 64] >> (b % 64) & 1)
                        sig.push_back(static_cast<int>(b));
                c.atoms.push_back({atom_name(c.atoms.size()), std::move(sig), Rat(0)});
                c.atom_cells.emplace_back();
            }
            c.atoms[it->second].measure += vol;
            c.atom_cells[it->second].push_back(std::move(cell));
        }
        // advance the cell index, last coordinate fastest
        int k = d - 1;
        while (k >= 0 && ++idx[k] == slot_counts[k]) idx[k--] = 0;
        if (k < 0) break;
    }
    finalize(c);
    return c;
}

std::vector<Rat> atom_measures_from_oracle(
    const std::vector<std::vector<std::string>>& signatures,
    const std::function<Rat(const std::vector<std::string>&)>& oracle) {
    // F is the union of all signatures.
    std::vector<std::string> all_ids;
    std::unordered_map<std::string, int> index;
    for (const auto& sig : signatures) {
        if (sig.empty()) throw Error("empty signature");
        for (const auto& id : sig)
            if (index.emplace(id, static_cast<int>(all_ids.size())).second)
                all_ids.push_back(id);
    }

    const std::size_t m = signatures.size();
    std::vector<std::vector<int>> sigs(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (const auto& id : signatures[i]) sigs[i].push_back(index.at(id));
        std::sort(sigs[i].begin(), sigs[i].end());
    }

    Rat mu_all = oracle(all_ids);
    if (mu_all < 0) throw Error("oracle returned a negative measure");

    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sigs[a].size() < sigs[b].size();
    });

    auto strict_subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() >= b.size()) return false;
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };

    std::vector<Rat> measures(m);
    std::vector<char> done(m, 0);
    for (std::size_t pos = 0; pos < m; ++pos) {
        std::size_t i = order[pos];
        // complement F \ A
        std::vector<char> in_sig(all_ids.size(), 0);
        for (int q : sigs[i]) in_sig[q] = 1;
        std::vector<std::string> complement;
        for (std::size_t q = 0; q < all_ids.size(); ++q)
            if (!in_sig[q]) complement.push_back(all_ids[q]);
        Rat rest = oracle(complement);
        if (rest < 0) throw Error("oracle returned a negative measure");
        Rat measure = mu_all - rest;
        for (std::size_t j = 0; j < m; ++j)
            if (done[j] && strict_subset(sigs[j], sigs[i])) measure -= measures[j];
        if (measure < 0)
            throw Error("inconsistent oracle: negative atom measure");
        measures[i] = measure;
        done[i] = 1;
    }
    return measures;
}

}  // namespace carleson
