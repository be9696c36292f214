#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace setsys {

// A single edge: nonempty set of positive vertices, stored strictly ascending.
class Edge {
public:
    explicit Edge(std::vector<int> vertices);

    const std::vector<int>& vertices() const { return vertices_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    int min_vertex() const { return vertices_.front(); }
    int max_vertex() const { return vertices_.back(); }
    bool contains(int v) const;

    auto operator<=>(const Edge&) const = default;

private:
    std::vector<int> vertices_;
};

// A finite multiset of edges, kept in canonical order: edges sorted
// lexicographically by their ascending vertex sequences (so {1} < {1,2} < {2}).
// Repeated edges are allowed and stored as repeated entries.
class SetSystem {
public:
    SetSystem() = default;
    explicit SetSystem(std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    bool empty() const { return edges_.empty(); }
    int size() const { return static_cast<int>(edges_.size()); }
    // Largest vertex appearing anywhere; 0 for the empty system.
    int max_vertex() const;

    auto operator<=>(const SetSystem&) const = default;

    // {"edges": [[1,2],[3],[3]]}
    std::string to_json() const;
    static SetSystem from_json(const std::string& text);

private:
    std::vector<Edge> edges_;
};

// Edges over an arbitrary totally ordered integer label set, before relabeling.
using RawEdges = std::vector<std::vector<std::int64_t>>;

// Relabel the union of all labels order-isomorphically onto 1..m and return
// the canonical system. Rejects empty edges and repeated labels inside an edge.
SetSystem normalize(const RawEdges& raw);

// Total weight: sum of edge sizes (equivalently, sum of vertex degrees).
int weight(const SetSystem& h);

// vertex -> number of edge copies containing it (with multiplicity).
std::map<int, int> degree_profile(const SetSystem& h);

// True when no edge is repeated.
bool is_simple(const SetSystem& h);

// True when the vertex set is exactly {1, ..., max_vertex()}.
bool is_normalized(const SetSystem& h);

// A partition of {1..n} into nonempty blocks. Blocks are stored ascending,
// ordered by their minima.
class SetPartition {
public:
    SetPartition(int n, std::vector<std::vector<int>> blocks);

    int ground_size() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    // Index into blocks() of the block containing the element.
    int block_of(int element) const;
    // Every two elements of a common block differ by at least m.
    bool is_sparse(int m) const;

    auto operator<=>(const SetPartition&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

// A partition of {1..n} into consecutive intervals, described by the ordered
// sequence of interval lengths (a composition of n).
class IntervalPartition {
public:
    explicit IntervalPartition(std::vector<int> lengths);

    int ground_size() const { return n_; }
    const std::vector<int>& lengths() const { return lengths_; }
    int count() const { return static_cast<int>(lengths_.size()); }
    // 0-based index of the interval containing the element.
    int interval_of(int element) const;
    // Inclusive [first, last] of the i-th interval (0-based i, 1-based elements).
    std::pair<int, int> interval(int i) const;

    auto operator<=>(const IntervalPartition&) const = default;

private:
    int n_ = 0;
    std::vector<int> lengths_;
    std::vector<int> starts_;  // starts_[i] = first element of interval i
};

// P is orthogonal to Q when no block of P contains two elements of one interval.
bool orthogonal(const IntervalPartition& q, const SetPartition& p);

// A validated pair (Q, P) over a common ground set with P orthogonal to Q.
class OrthogonalPair {
public:
    OrthogonalPair(IntervalPartition q, SetPartition p);

    const IntervalPartition& q() const { return q_; }
    const SetPartition& p() const { return p_; }
    int ground_size() const { return q_.ground_size(); }

    auto operator<=>(const OrthogonalPair&) const = default;

private:
    IntervalPartition q_;
    SetPartition p_;
};

}  // namespace setsys
