#pragma once

#include "setsys/bignum.hpp"
#include "setsys/core.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace setsys {

// What to stream: all normalized systems of the given total weight, optionally
// restricted to simple systems and/or a maximum vertex degree.
struct EnumSpec {
    int weight = 1;
    bool simple_only = false;
    std::optional<int> max_degree;
};

using SystemVisitor = std::function<void(const SetSystem&)>;
using PartitionVisitor = std::function<void(const SetPartition&)>;
using CompositionVisitor = std::function<void(const IntervalPartition&)>;
using PairVisitor = std::function<void(const OrthogonalPair&)>;
using WordVisitor = std::function<void(const std::vector<int>&)>;

// Stream every matching system exactly once, in canonical order (systems
// compared as their sorted edge sequences, lexicographically). Memory stays
// proportional to one system plus the recursion stack.
void gen_set_systems(const EnumSpec& spec, const SystemVisitor& visit);

// Same stream, counted instead of materialized. jobs > 1 splits the work by
// the first chosen edge across threads; the total is summed in a fixed order,
// so the result is deterministic.
BigInt count_set_systems(const EnumSpec& spec, int jobs = 1);

// All partitions of {1..n}, ordered by first occurrence of each block
// (restricted-growth order).
void gen_partitions(int n, const PartitionVisitor& visit);

// Partitions in which elements of a common block differ by at least m.
void gen_sparse_partitions(int n, int m, const PartitionVisitor& visit);

// All compositions of n (interval partitions of {1..n}), ordered
// lexicographically by length sequence; max_len bounds every part.
void gen_interval_partitions(int n, std::optional<int> max_len,
                             const CompositionVisitor& visit);

// All pairs (Q, P) with P orthogonal to Q, ordered by Q first (composition
// order above), then by P (restricted-growth order).
void gen_orthogonal_pairs(int n, const PairVisitor& visit);

// Length-n words over the alphabet {1..r}; when sparseness k is given, any
// window of k consecutive positions must have pairwise distinct letters.
// Lexicographic order.
void gen_words(int r, int n, std::optional<int> sparseness, const WordVisitor& visit);

// Which of the four symmetries of a 0-1 matrix matter: ordered = the axis is
// a sequence (permuting it changes the object), repeatable = equal lines are
// allowed. Matrices must have no zero row and no zero column, and exactly n
// ones in total.
struct MatrixFlags {
    bool rows_ordered = false;
    bool rows_repeatable = true;
    bool cols_ordered = true;
    bool cols_repeatable = true;

    // Four binary digits, e.g. "0111".
    static MatrixFlags from_bits(const std::string& bits);
    std::string bits() const;
};

BigInt count_matrices(int n, MatrixFlags flags);

}  // namespace setsys
