#pragma once

#include "setsys/bignum.hpp"
#include "setsys/core.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace setsys {

// Raised by recover_nonsimple when its argument is not the image of any
// system under inject_nonsimple.
class NotInImageError : public std::runtime_error {
public:
    explicit NotInImageError(const std::string& what) : std::runtime_error(what) {}
};

// The pairs (Q, P') that trace to one common system, together with that
// system and the canonical representative.
struct EquivClass {
    OrthogonalPair representative;
    SetSystem set_system;
    BigInt size;
};

// Collapse a pair to its trace system: each block contributes the edge of
// interval indices it meets. Output is normalized.
SetSystem pair_to_system(const OrthogonalPair& qp);

// Canonical section of pair_to_system: intervals sized by vertex degrees, and
// the j-th edge copy containing vertex i (in canonical edge order) takes the
// j-th element of interval I_i. pair_to_system(system_to_pair(h)) == h.
OrthogonalPair system_to_pair(const SetSystem& h);

// Everything equivalent to the given pair. Exhaustive, so the ground size is
// capped at 9.
EquivClass class_of(const OrthogonalPair& qp);

// prod |I_i|! — an upper bound for the class size, attained exactly when the
// trace system is simple.
BigInt class_size_bound(const OrthogonalPair& qp);

// Weight-preserving injection of non-simple systems into simple ones: new
// vertices just below the least regular vertex absorb edge multiplicities,
// with a marker vertex and singleton padding when some repeated edge is not a
// singleton. Input must be normalized and non-simple.
SetSystem inject_nonsimple(const SetSystem& h);

// Exact inverse on the image; throws NotInImageError elsewhere.
SetSystem recover_nonsimple(const SetSystem& h);

// The graph on {1..n} joining consecutive elements of each partition block.
// Components must be paths (vertex degrees at most 2, no cycles).
class PartitionGraph {
public:
    PartitionGraph(int n, std::vector<std::pair<int, int>> edges);

    int ground_size() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    auto operator<=>(const PartitionGraph&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // each (min, max), sorted
};

PartitionGraph partition_to_graph(const SetPartition& p);
SetPartition graph_to_partition(const PartitionGraph& g);

// Edge-shift bijection between 2-sparse partitions of {1..n} and all
// partitions of {1..n-1}: each graph edge {x, y} becomes {x, y-1}. More
// generally it takes m-sparse partitions to (m-1)-sparse ones.
SetPartition sparse_reduce(const SetPartition& p);

// Inverse shift, {x, y} -> {x, y+1}, from partitions of {1..n} to 2-sparse
// partitions of {1..n+1}.
SetPartition sparse_expand(const SetPartition& p);

}  // namespace setsys
