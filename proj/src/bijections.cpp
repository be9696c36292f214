#include "setsys/bijections.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace setsys {

SetSystem pair_to_system(const OrthogonalPair& qp) {
    std::vector<Edge> edges;
    edges.reserve(qp.p().blocks().size());
    for (const auto& block : qp.p().blocks()) {
        std::vector<int> verts;
        verts.reserve(block.size());
        // Block elements ascend and hit pairwise distinct intervals, so the
        // interval indices are strictly increasing already.
        for (int x : block) verts.push_back(qp.q().interval_of(x) + 1);
        edges.emplace_back(std::move(verts));
    }
    return SetSystem(std::move(edges));
}

OrthogonalPair system_to_pair(const SetSystem& h) {
    if (h.empty()) throw std::invalid_argument("system must be nonempty");
    if (!is_normalized(h)) throw std::invalid_argument("system must be normalized");
    const auto deg = degree_profile(h);
    const int m = h.max_vertex();
    std::vector<int> lengths;
    lengths.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) lengths.push_back(deg.at(i));
    IntervalPartition q(lengths);

    // Hand the j-th edge copy containing vertex i (canonical order) the j-th
    // element of interval I_i.
    std::vector<int> next_elem(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i) next_elem[static_cast<std::size_t>(i)] = q.interval(i - 1).first;
    std::vector<std::vector<int>> blocks;
    blocks.reserve(h.edges().size());
    for (const Edge& e : h.edges()) {
        std::vector<int> block;
        block.reserve(e.vertices().size());
        for (int i : e.vertices()) block.push_back(next_elem[static_cast<std::size_t>(i)]++);
        blocks.push_back(std::move(block));
    }
    return OrthogonalPair(std::move(q), SetPartition(q.ground_size(), std::move(blocks)));
}

BigInt class_size_bound(const OrthogonalPair& qp) {
    BigInt bound = 1;
    for (int len : qp.q().lengths())
        for (int i = 2; i <= len; ++i) bound *= i;
    return bound;
}

EquivClass class_of(const OrthogonalPair& qp) {
    const int n = qp.ground_size();
    if (n > 9)
        throw std::invalid_argument("exhaustive class listing supports ground size <= 9");
    const SetSystem h = pair_to_system(qp);
    OrthogonalPair rep = system_to_pair(h);
    const IntervalPartition& q = rep.q();
    const int m = q.count();
    const int t = h.size();

    // For each vertex i, the canonical positions of the edge copies that
    // contain it; any reassignment permutes interval I_i among exactly those
    // copies, and every member of the class arises from some tuple of
    // permutations (with collisions only when equal edges swap wholesale).
    std::vector<std::vector<int>> copies(static_cast<std::size_t>(m) + 1);
    for (int c = 0; c < t; ++c)
        for (int i : h.edges()[static_cast<std::size_t>(c)].vertices())
            copies[static_cast<std::size_t>(i)].push_back(c);
    std::vector<std::vector<int>> perm(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i) {
        perm[static_cast<std::size_t>(i)].resize(copies[static_cast<std::size_t>(i)].size());
        std::iota(perm[static_cast<std::size_t>(i)].begin(), perm[static_cast<std::size_t>(i)].end(), 0);
    }
    std::set<SetPartition> members;
    auto emit = [&] {
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(t));
        for (int i = 1; i <= m; ++i) {
            const int start = q.interval(i - 1).first;
            const auto& cp = copies[static_cast<std::size_t>(i)];
            const auto& pm = perm[static_cast<std::size_t>(i)];
            // j-th element of interval I_i goes to the copy chosen by pm[j].
            for (std::size_t j = 0; j < cp.size(); ++j)
                blocks[static_cast<std::size_t>(cp[static_cast<std::size_t>(pm[j])])]
                    .push_back(start + static_cast<int>(j));
        }
        members.insert(SetPartition(n, std::move(blocks)));
    };
    // Odometer over the per-vertex permutations.
    auto rec = [&](auto&& self, int i) -> void {
        if (i > m) {
            emit();
            return;
        }
        auto& p = perm[static_cast<std::size_t>(i)];
        std::sort(p.begin(), p.end());
        do {
            self(self, i + 1);
        } while (std::next_permutation(p.begin(), p.end()));
    };
    rec(rec, 1);
    return EquivClass{std::move(rep), h, BigInt(members.size())};
}

namespace {

bool vertex_singular(const SetSystem& h, const std::map<int, int>& deg, int v) {
    auto it = deg.find(v);
    if (it == deg.end() || it->second != 1) return false;
    const Edge singleton(std::vector<int>{v});
    return std::binary_search(h.edges().begin(), h.edges().end(), singleton);
}

}  // namespace

SetSystem inject_nonsimple(const SetSystem& h) {
    if (!is_normalized(h)) throw std::invalid_argument("system must be normalized");
    if (is_simple(h)) throw std::invalid_argument("system must be non-simple");
    const int n = weight(h);
    const auto deg = degree_profile(h);

    // Group the canonical edge sequence into (edge, multiplicity) runs.
    std::vector<std::pair<const Edge*, int>> groups;
    for (const Edge& e : h.edges()) {
        if (!groups.empty() && *groups.back().first == e)
            ++groups.back().second;
        else
            groups.emplace_back(&e, 1);
    }
    int k = 1;
    bool all_repeats_are_singletons = true;
    for (const auto& [e, mult] : groups) {
        k = std::max(k, mult);
        if (mult >= 2 && e->size() > 1) all_repeats_are_singletons = false;
    }

    // Least regular vertex; every vertex of a repeated edge is regular, so it
    // exists. New labels sit strictly between u-1 and u after scaling every
    // original label by k+1.
    const int m = h.max_vertex();
    int u = 0;
    for (int v = 1; v <= m; ++v)
        if (!vertex_singular(h, deg, v)) { u = v; break; }
    const std::int64_t scale = k + 1;
    auto lift = [scale](int x) { return static_cast<std::int64_t>(x) * scale; };
    auto w_label = [&](int i) { return static_cast<std::int64_t>(u - 1) * scale + i; };

    RawEdges raw;
    if (all_repeats_are_singletons) {
        for (const auto& [e, mult] : groups) {
            if (mult >= 2) {
                std::vector<std::int64_t> edge;
                for (int i = 1; i < mult; ++i) edge.push_back(w_label(i));
                edge.push_back(lift(e->vertices().front()));
                raw.push_back(std::move(edge));
            } else {
                std::vector<std::int64_t> edge;
                for (int v : e->vertices()) edge.push_back(lift(v));
                raw.push_back(std::move(edge));
            }
        }
    } else {
        long long gained = 0;
        for (const auto& [e, mult] : groups) {
            std::vector<std::int64_t> edge;
            if (mult >= 2) {
                for (int i = 1; i < mult; ++i) edge.push_back(w_label(i));
                gained += static_cast<long long>(mult - 1) * (e->size() - 1);
            }
            for (int v : e->vertices()) edge.push_back(lift(v));
            raw.push_back(std::move(edge));
        }
        raw.push_back({w_label(k)});  // marker
        for (long long p = 0; p < gained - 1; ++p) raw.push_back({-p});  // padding
    }
    SetSystem out = normalize(raw);
    if (!is_simple(out) || weight(out) != n)
        throw std::logic_error("injection produced an invalid image");
    return out;
}

SetSystem recover_nonsimple(const SetSystem& h) {
    if (!is_normalized(h)) throw std::invalid_argument("system must be normalized");
    if (!is_simple(h)) throw std::invalid_argument("system must be simple");
    const auto deg = degree_profile(h);
    const int m = h.max_vertex();

    int w = 0;
    for (int v = 1; v <= m; ++v)
        if (!vertex_singular(h, deg, v)) { w = v; break; }
    if (w == 0) throw NotInImageError("no regular vertex");

    // Longest interval starting at w that is a proper subset of some edge.
    int t = 0;
    for (const Edge& e : h.edges()) {
        if (!e.contains(w)) continue;
        int run = 1;
        while (e.contains(w + run)) ++run;
        t = std::max(t, e.size() > run ? run : run - 1);
    }
    if (t < 1) throw NotInImageError("no edge properly contains an interval at the least regular vertex");
    const int z = w + t;
    const bool marker_case = z <= m && vertex_singular(h, deg, z);

    RawEdges raw;
    long long gained = 0;
    for (const Edge& e : h.edges()) {
        std::vector<int> inter, rest;
        for (int v : e.vertices())
            (v >= w && v < w + t ? inter : rest).push_back(v);
        if (marker_case && e.size() == 1 && e.vertices().front() == z) continue;  // marker
        if (inter.empty()) {
            raw.emplace_back(rest.begin(), rest.end());
            continue;
        }
        // Absorbed multiplicity: the new vertices taken from an edge must be
        // exactly w, w+1, ... with no holes.
        for (std::size_t i = 0; i < inter.size(); ++i)
            if (inter[i] != w + static_cast<int>(i))
                throw NotInImageError("edge meets the new-vertex interval off its prefix");
        if (rest.empty()) throw NotInImageError("edge lies inside the new-vertex interval");
        const int mult = static_cast<int>(inter.size()) + 1;
        if (marker_case) {
            if (rest.front() <= z) throw NotInImageError("absorbed edge reaches below the marker");
            gained += static_cast<long long>(mult - 1) * (static_cast<int>(rest.size()) - 1);
        } else {
            if (rest.size() != 1 || rest.front() < z)
                throw NotInImageError("absorbed edge is not a lifted singleton");
        }
        for (int c = 0; c < mult; ++c) raw.emplace_back(rest.begin(), rest.end());
    }
    if (marker_case) {
        if (gained < 1) throw NotInImageError("marker present but no multiplicity was absorbed");
        const long long padding = gained - 1;
        if (padding >= w) throw NotInImageError("padding would overlap regular vertices");
        for (int v = 1; v <= padding; ++v) {
            if (!vertex_singular(h, deg, v))
                throw NotInImageError("expected padding vertex is not a lone singleton");
            // Drop {v}: it was appended above as a kept edge.
            auto it = std::find(raw.begin(), raw.end(), std::vector<std::int64_t>{v});
            raw.erase(it);
        }
    }

    SetSystem candidate = normalize(raw);
    if (is_simple(candidate)) throw NotInImageError("candidate preimage has no repeated edge");
    if (inject_nonsimple(candidate) != h)
        throw NotInImageError("candidate preimage does not map back");
    return candidate;
}

PartitionGraph::PartitionGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("ground set must be nonempty");
    std::vector<int> degree(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<int> parent(static_cast<std::size_t>(n_) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (auto& [a, b] : edges_) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > n_ || a == b) throw std::invalid_argument("bad graph edge");
        if (++degree[static_cast<std::size_t>(a)] > 2 || ++degree[static_cast<std::size_t>(b)] > 2)
            throw std::invalid_argument("graph vertex degree exceeds 2");
        const int ra = find(a), rb = find(b);
        if (ra == rb) throw std::invalid_argument("graph contains a cycle or repeated edge");
        parent[static_cast<std::size_t>(ra)] = rb;
    }
    std::sort(edges_.begin(), edges_.end());
}

PartitionGraph partition_to_graph(const SetPartition& p) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& block : p.blocks())
        for (std::size_t i = 1; i < block.size(); ++i)
            edges.emplace_back(block[i - 1], block[i]);
    return PartitionGraph(p.ground_size(), std::move(edges));
}

SetPartition graph_to_partition(const PartitionGraph& g) {
    const int n = g.ground_size();
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](auto&& self, int x) -> int {
        if (parent[static_cast<std::size_t>(x)] == x) return x;
        return parent[static_cast<std::size_t>(x)] =
                   self(self, parent[static_cast<std::size_t>(x)]);
    };
    for (const auto& [a, b] : g.edges())
        parent[static_cast<std::size_t>(find(find, a))] = find(find, b);
    std::map<int, std::vector<int>> comp;
    for (int v = 1; v <= n; ++v) comp[find(find, v)].push_back(v);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(comp.size());
    for (auto& [root, members] : comp) blocks.push_back(std::move(members));
    return SetPartition(n, std::move(blocks));
}

SetPartition sparse_reduce(const SetPartition& p) {
    if (p.ground_size() < 2) throw std::invalid_argument("need ground size at least 2");
    if (!p.is_sparse(2)) throw std::invalid_argument("partition must be 2-sparse");
    const PartitionGraph g = partition_to_graph(p);
    std::vector<std::pair<int, int>> shifted;
    for (const auto& [a, b] : g.edges()) shifted.emplace_back(a, b - 1);
    return graph_to_partition(PartitionGraph(p.ground_size() - 1, std::move(shifted)));
}

SetPartition sparse_expand(const SetPartition& p) {
    const PartitionGraph g = partition_to_graph(p);
    std::vector<std::pair<int, int>> shifted;
    for (const auto& [a, b] : g.edges()) shifted.emplace_back(a, b + 1);
    return graph_to_partition(PartitionGraph(p.ground_size() + 1, std::move(shifted)));
}

}  // namespace setsys
