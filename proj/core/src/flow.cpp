#include "carleson/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace carleson {

std::string FlowNetwork::node_name(int v, const Collection& c) const {
    if (v == source()) return "s";
    if (v == sink()) return "t";
    if (is_atom_node(v)) return "A:" + std::to_string(atom_of[v - 1]);
    return "Q:" + c.sets[set_of[v - 1 - num_atom_nodes]].id;
}

FlowNetwork build_network(const Collection& c, const Rat& lambda,
                          const std::vector<char>* domain_mask) {
    if (lambda <= 0) throw Error("lambda must be positive");
    const int n = static_cast<int>(c.sets.size());
    auto in_domain = [&](int q) { return !domain_mask || (*domain_mask)[q]; };

    FlowNetwork net;
    std::vector<int> set_node_of(n, -1);
    for (int q = 0; q < n; ++q) {
        if (!in_domain(q)) continue;
        net.set_of.push_back(q);
    }
    net.num_set_nodes = static_cast<int>(net.set_of.size());

    std::vector<std::vector<int>> kept_sigs;
    for (std::size_t a = 0; a < c.atoms.size(); ++a) {
        std::vector<int> sig;
        for (int q : c.atoms[a].signature)
            if (in_domain(q)) sig.push_back(q);
        if (sig.empty()) continue;
        net.atom_of.push_back(static_cast<int>(a));
        kept_sigs.push_back(std::move(sig));
    }
    net.num_atom_nodes = static_cast<int>(net.atom_of.size());

    for (int k = 0; k < net.num_set_nodes; ++k)
        set_node_of[net.set_of[k]] = net.set_node(k);

    for (int k = 0; k < net.num_atom_nodes; ++k)
        net.edges.push_back({net.source(), net.atom_node(k),
                             Capacity::fin(c.atoms[net.atom_of[k]].measure)});
    for (int k = 0; k < net.num_atom_nodes; ++k)
        for (int q : kept_sigs[k])
            net.edges.push_back(
                {net.atom_node(k), set_node_of[q], Capacity::inf()});
    for (int k = 0; k < net.num_set_nodes; ++k)
        net.edges.push_back({net.set_node(k), net.sink(),
                             Capacity::fin(c.weight(net.set_of[k]) / lambda)});
    return net;
}

namespace {

// Dinic over integral capacities. T is long long when everything fits,
// mpz_class otherwise. Infinite edges keep a flag; their residual is
// always positive in the forward direction.
template <class T>
struct Dinic {
    struct Arc {
        int to;
        int rev;
        T cap;  // remaining capacity; unused when inf
        bool inf;
    };
    std::vector<std::vector<Arc>> adj;
    std::vector<int> level, iter;
    int s, t;

    explicit Dinic(int node_count, int s_, int t_)
        : adj(node_count), level(node_count), iter(node_count), s(s_), t(t_) {}

    void add_edge(int from, int to, T cap, bool inf) {
        adj[from].push_back(
            {to, static_cast<int>(adj[to].size()), std::move(cap), inf});
        adj[to].push_back(
            {from, static_cast<int>(adj[from].size()) - 1, T(0), false});
    }

    bool has_residual(const Arc& a) const { return a.inf || a.cap > 0; }

    bool bfs() {
        std::fill(level.begin(), level.end(), -1);
        std::deque<int> queue{s};
        level[s] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (const Arc& a : adj[v]) {
                if (level[a.to] < 0 && has_residual(a)) {
                    level[a.to] = level[v] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        return level[t] >= 0;
    }

    // limit < 0 means unbounded; every s-t path contains a finite edge, so
    // the actual push is always finite.
    T dfs(int v, const T& limit) {
        if (v == t) return limit;
        for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); ++i) {
            Arc& a = adj[v][i];
            if (!has_residual(a) || level[a.to] != level[v] + 1) continue;
            T next_limit = a.inf ? limit
                           : (limit < 0 || a.cap < limit) ? a.cap
                                                          : limit;
            T pushed = dfs(a.to, next_limit);
            if (pushed > 0) {
                if (!a.inf) a.cap -= pushed;
                adj[a.to][a.rev].cap += pushed;
                return pushed;
            }
        }
        level[v] = -1;
        return T(0);
    }

    void run() {
        while (bfs()) {
            std::fill(iter.begin(), iter.end(), 0);
            while (dfs(s, T(-1)) > 0) {
            }
        }
    }
};

template <class T>
Flow run_dinic(const FlowNetwork& net, const std::vector<mpz_class>& scaled,
               const mpz_class& denom) {
    Dinic<T> dinic(net.node_count(), net.source(), net.sink());
    // Remember where each network edge landed in the adjacency lists.
    std::vector<std::pair<int, int>> arc_of(net.edges.size());
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        const FlowEdge& e = net.edges[i];
        arc_of[i] = {e.from, static_cast<int>(dinic.adj[e.from].size())};
        T cap(0);
        if (!e.cap.infinite) {
            if constexpr (std::is_same_v<T, long long>)
                cap = scaled[i].get_si();
            else
                cap = scaled[i];
        }
        dinic.add_edge(e.from, e.to, std::move(cap), e.cap.infinite);
    }
    dinic.run();

    Flow flow;
    flow.edge_flow.resize(net.edges.size(), Rat(0));
    flow.value = 0;
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        auto [from, idx] = arc_of[i];
        const auto& arc = dinic.adj[from][idx];
        // flow pushed over arc i equals the reverse arc's capacity
        mpz_class pushed;
        if constexpr (std::is_same_v<T, long long>)
            pushed = static_cast<long>(dinic.adj[arc.to][arc.rev].cap);
        else
            pushed = dinic.adj[arc.to][arc.rev].cap;
        Rat f(pushed, denom);
        f.canonicalize();
        flow.edge_flow[i] = f;
        if (from == net.source()) flow.value += flow.edge_flow[i];
    }
    return flow;
}

}  // namespace

Flow max_flow(const FlowNetwork& net) {
    mpz_class denom = 1;
    for (const FlowEdge& e : net.edges) {
        if (e.cap.infinite) continue;
        if (e.cap.value < 0) throw Error("negative capacity");
        mpz_class d = e.cap.value.get_den();
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> scaled(net.edges.size());
    mpz_class total = 0;
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        if (net.edges[i].cap.infinite) continue;
        Rat s = net.edges[i].cap.value * denom;
        scaled[i] = s.get_num();
        total += scaled[i];
    }
    if (total.fits_slong_p() &&
        total.get_si() < std::numeric_limits<long>::max() / 4)
        return run_dinic<long long>(net, scaled, denom);
    return run_dinic<mpz_class>(net, scaled, denom);
}

Cut min_cut(const FlowNetwork& net, const Flow& f) {
    if (f.edge_flow.size() != net.edges.size())
        throw Error("flow does not match network");
    // residual adjacency from the given flow
    std::vector<std::vector<std::pair<int, bool>>> out(net.node_count());
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        const FlowEdge& e = net.edges[i];
        bool forward_residual =
            e.cap.infinite || f.edge_flow[i] < e.cap.value;
        if (forward_residual) out[e.from].push_back({e.to, true});
        if (f.edge_flow[i] > 0) out[e.to].push_back({e.from, true});
    }
    std::vector<char> visited(net.node_count(), 0);
    std::deque<int> queue{net.source()};
    visited[net.source()] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (auto [w, ok] : out[v]) {
            if (ok && !visited[w]) {
                visited[w] = 1;
                queue.push_back(w);
            }
        }
    }
    if (visited[net.sink()])
        throw Error("flow is not maximum: augmenting path exists");

    Cut cut;
    cut.in_source_side = visited;
    cut.capacity = Capacity::fin(Rat(0));
    for (const FlowEdge& e : net.edges) {
        if (visited[e.from] && !visited[e.to]) {
            if (e.cap.infinite) {
                cut.capacity = Capacity::inf();
                break;
            }
            cut.capacity.value += e.cap.value;
        }
    }
    return cut;
}

std::string to_dot(const FlowNetwork& net, const Collection& c, const Flow* f) {
    std::ostringstream os;
    os << "digraph G {\n  rankdir=LR;\n";
    for (int v = 0; v < net.node_count(); ++v)
        os << "  n" << v << " [label=\"" << net.node_name(v, c) << "\"];\n";
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        const FlowEdge& e = net.edges[i];
        os << "  n" << e.from << " -> n" << e.to << " [label=\"";
        if (e.cap.infinite)
            os << "inf";
        else
            os << rat_str(e.cap.value);
        if (f) os << " | " << rat_str(f->edge_flow[i]);
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace carleson
