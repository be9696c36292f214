#include "setsys/core.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace setsys {

Edge::Edge(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("edge must be nonempty");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i] < 1) throw std::invalid_argument("edge vertices must be positive");
        if (i > 0 && vertices_[i] <= vertices_[i - 1])
            throw std::invalid_argument("edge vertices must be strictly ascending");
    }
}

bool Edge::contains(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

SetSystem::SetSystem(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
}

int SetSystem::max_vertex() const {
    int m = 0;
    for (const Edge& e : edges_) m = std::max(m, e.max_vertex());
    return m;
}

std::string SetSystem::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Edge& e : edges_) arr.push_back(e.vertices());
    return nlohmann::json{{"edges", arr}}.dump();
}

SetSystem SetSystem::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("expected an object with an \"edges\" array");
    std::vector<Edge> edges;
    for (const auto& item : j["edges"]) {
        if (!item.is_array()) throw std::invalid_argument("each edge must be an array");
        std::vector<int> verts;
        for (const auto& v : item) {
            if (!v.is_number_integer()) throw std::invalid_argument("vertices must be integers");
            verts.push_back(v.get<int>());
        }
        edges.emplace_back(std::move(verts));  // validates nonempty/ascending/positive
    }
    return SetSystem(std::move(edges));
}

SetSystem normalize(const RawEdges& raw) {
    std::vector<std::int64_t> labels;
    for (const auto& edge : raw) {
        if (edge.empty()) throw std::invalid_argument("edge must be nonempty");
        labels.insert(labels.end(), edge.begin(), edge.end());
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    auto rank = [&labels](std::int64_t x) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), x) -
                                labels.begin()) + 1;
    };
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& edge : raw) {
        std::vector<int> verts;
        verts.reserve(edge.size());
        for (std::int64_t x : edge) verts.push_back(rank(x));
        std::sort(verts.begin(), verts.end());
        if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
            throw std::invalid_argument("repeated label inside an edge");
        edges.emplace_back(std::move(verts));
    }
    return SetSystem(std::move(edges));
}

int weight(const SetSystem& h) {
    int w = 0;
    for (const Edge& e : h.edges()) w += e.size();
    return w;
}

std::map<int, int> degree_profile(const SetSystem& h) {
    std::map<int, int> deg;
    for (const Edge& e : h.edges())
        for (int v : e.vertices()) ++deg[v];
    return deg;
}

bool is_simple(const SetSystem& h) {
    const auto& es = h.edges();
    return std::adjacent_find(es.begin(), es.end()) == es.end();
}

bool is_normalized(const SetSystem& h) {
    auto deg = degree_profile(h);
    int expect = 1;
    for (const auto& [v, d] : deg) {
        if (v != expect++) return false;
    }
    return true;
}

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 1) throw std::invalid_argument("ground set must be nonempty");
    std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
    int total = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("partition block must be nonempty");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > n_) throw std::invalid_argument("element outside ground set");
            if (seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("element appears twice");
            seen[static_cast<std::size_t>(x)] = 1;
            ++total;
        }
    }
    if (total != n_) throw std::invalid_argument("blocks must cover the ground set");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

int SetPartition::block_of(int element) const {
    if (element < 1 || element > n_) throw std::invalid_argument("element outside ground set");
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), element))
            return static_cast<int>(i);
    throw std::logic_error("partition invariant violated");
}

bool SetPartition::is_sparse(int m) const {
    if (m < 1) throw std::invalid_argument("sparseness must be at least 1");
    for (const auto& b : blocks_)
        for (std::size_t i = 1; i < b.size(); ++i)
            if (b[i] - b[i - 1] < m) return false;
    return true;
}

IntervalPartition::IntervalPartition(std::vector<int> lengths)
    : lengths_(std::move(lengths)) {
    if (lengths_.empty()) throw std::invalid_argument("need at least one interval");
    starts_.reserve(lengths_.size());
    int pos = 1;
    for (int len : lengths_) {
        if (len < 1) throw std::invalid_argument("interval lengths must be positive");
        starts_.push_back(pos);
        pos += len;
    }
    n_ = pos - 1;
}

int IntervalPartition::interval_of(int element) const {
    if (element < 1 || element > n_) throw std::invalid_argument("element outside ground set");
    auto it = std::upper_bound(starts_.begin(), starts_.end(), element);
    return static_cast<int>(it - starts_.begin()) - 1;
}

std::pair<int, int> IntervalPartition::interval(int i) const {
    if (i < 0 || i >= count()) throw std::invalid_argument("interval index out of range");
    return {starts_[static_cast<std::size_t>(i)],
            starts_[static_cast<std::size_t>(i)] + lengths_[static_cast<std::size_t>(i)] - 1};
}

bool orthogonal(const IntervalPartition& q, const SetPartition& p) {
    if (q.ground_size() != p.ground_size()) return false;
    for (const auto& block : p.blocks()) {
        int prev = -1;
        for (int x : block) {  // ascending, so interval indices are nondecreasing
            int iv = q.interval_of(x);
            if (iv == prev) return false;
            prev = iv;
        }
    }
    return true;
}

OrthogonalPair::OrthogonalPair(IntervalPartition q, SetPartition p)
    : q_(std::move(q)), p_(std::move(p)) {
    if (q_.ground_size() != p_.ground_size())
        throw std::invalid_argument("interval partition and set partition sizes differ");
    if (!orthogonal(q_, p_))
        throw std::invalid_argument("set partition is not orthogonal to the interval partition");
}

}  // namespace setsys
