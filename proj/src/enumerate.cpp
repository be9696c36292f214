#include "setsys/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace setsys {

namespace {

// Generation works over the pool of all nonempty ascending subsets of
// {1..weight}, listed in lexicographic order (a prefix precedes its
// extensions, so {1} < {1,2} < {1,3} < {2}). A system is a nondecreasing
// sequence of pool indices; emitting in DFS order over that representation
// yields systems in canonical order.
struct PoolEdge {
    std::vector<int> verts;
    std::uint64_t mask = 0;
    int size = 0;
    int min = 0;
    int max = 0;
};

// Past this the pool itself (2^w - 1 subsets) dominates memory and runtime
// far beyond anything exhaustive generation is good for.
constexpr int kMaxWeight = 18;

std::vector<PoolEdge> build_pool(int w) {
    std::vector<PoolEdge> pool;
    std::vector<int> cur;
    std::uint64_t mask = 0;
    auto rec = [&](auto&& self, int from) -> void {
        for (int v = from; v <= w; ++v) {
            cur.push_back(v);
            mask |= std::uint64_t(1) << v;
            pool.push_back({cur, mask, static_cast<int>(cur.size()), cur.front(), cur.back()});
            self(self, v + 1);
            mask &= ~(std::uint64_t(1) << v);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return pool;
}

void check_spec(const EnumSpec& spec) {
    if (spec.weight < 1) throw std::invalid_argument("weight must be at least 1");
    if (spec.weight > kMaxWeight)
        throw std::invalid_argument("exhaustive generation supports weight <= 18");
    if (spec.max_degree && *spec.max_degree < 1)
        throw std::invalid_argument("max_degree must be at least 1");
}

// Sink receives the nondecreasing list of chosen pool indices.
template <typename Sink>
class Generator {
public:
    Generator(const std::vector<PoolEdge>& pool, const EnumSpec& spec, Sink& sink,
              int root_offset = 0, int root_stride = 1)
        : pool_(pool),
          simple_(spec.simple_only),
          maxdeg_(spec.max_degree ? *spec.max_degree : INT_MAX),
          sink_(sink),
          root_offset_(root_offset),
          root_stride_(root_stride),
          deg_(static_cast<std::size_t>(spec.weight) + 1, 0) {
        chosen_.reserve(static_cast<std::size_t>(spec.weight));
        rec(0, 0, 0, spec.weight);
    }

private:
    void rec(int lb, std::uint64_t covered, int maxc, int w_rem) {
        if (w_rem == 0) {
            sink_(chosen_);
            return;
        }
        const std::uint64_t gap_mask =
            ~covered & (maxc >= 1 ? (std::uint64_t(2) << maxc) - 2 : 0);
        const int lowest_gap = gap_mask ? std::countr_zero(gap_mask) : INT_MAX;
        int root_seen = 0;
        for (int idx = lb; idx < static_cast<int>(pool_.size()); ++idx) {
            const PoolEdge& e = pool_[idx];
            // Pool minima are nondecreasing, so nothing further right can
            // cover the lowest missing vertex either.
            if (e.min > lowest_gap) break;
            if (covered == 0) {
                if (e.min != 1) break;  // first edge must contain vertex 1
                if (root_seen++ % root_stride_ != root_offset_) continue;
            }
            if (e.size > w_rem) continue;
            if (maxdeg_ != INT_MAX) {
                bool over = false;
                for (int v : e.verts)
                    if (deg_[static_cast<std::size_t>(v)] >= maxdeg_) { over = true; break; }
                if (over) continue;
            }
            const std::uint64_t cov2 = covered | e.mask;
            const int maxc2 = std::max(maxc, e.max);
            const std::uint64_t gaps2 = ~cov2 & ((std::uint64_t(2) << maxc2) - 2);
            const int num_gaps2 = std::popcount(gaps2);
            const int w_rem2 = w_rem - e.size;
            // Each missing vertex still needs an edge of its own weight, and
            // later edges all have min >= e.min, so a gap below that is dead.
            if (w_rem2 < num_gaps2) continue;
            if (num_gaps2 > 0 && std::countr_zero(gaps2) < e.min) continue;
            for (int v : e.verts) ++deg_[static_cast<std::size_t>(v)];
            chosen_.push_back(idx);
            rec(simple_ ? idx + 1 : idx, cov2, maxc2, w_rem2);
            chosen_.pop_back();
            for (int v : e.verts) --deg_[static_cast<std::size_t>(v)];
        }
    }

    const std::vector<PoolEdge>& pool_;
    const bool simple_;
    const int maxdeg_;
    Sink& sink_;
    const int root_offset_;
    const int root_stride_;
    std::vector<int> deg_;
    std::vector<int> chosen_;
};

}  // namespace

void gen_set_systems(const EnumSpec& spec, const SystemVisitor& visit) {
    check_spec(spec);
    const auto pool = build_pool(spec.weight);
    auto sink = [&](const std::vector<int>& chosen) {
        std::vector<Edge> edges;
        edges.reserve(chosen.size());
        for (int idx : chosen) edges.emplace_back(pool[static_cast<std::size_t>(idx)].verts);
        visit(SetSystem(std::move(edges)));
    };
    Generator(pool, spec, sink);
}

BigInt count_set_systems(const EnumSpec& spec, int jobs) {
    check_spec(spec);
    if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    const auto pool = build_pool(spec.weight);
    if (jobs == 1) {
        unsigned long long count = 0;
        auto sink = [&](const std::vector<int>&) { ++count; };
        Generator(pool, spec, sink);
        return BigInt(count);
    }
    std::vector<unsigned long long> subtotal(static_cast<std::size_t>(jobs), 0);
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&pool, &spec, &subtotal, t, jobs] {
            unsigned long long count = 0;
            auto sink = [&](const std::vector<int>&) { ++count; };
            Generator(pool, spec, sink, t, jobs);
            subtotal[static_cast<std::size_t>(t)] = count;
        });
    }
    for (auto& w : workers) w.join();
    BigInt total = 0;
    for (unsigned long long c : subtotal) total += c;
    return total;
}

namespace {

// Shared recursion for plain and sparse partition generation: element i may
// join an existing block only if it keeps the block m-sparse. Blocks are
// created in order of their minima, so emission follows restricted-growth
// order.
void gen_partitions_impl(int n, int m, const PartitionVisitor& visit) {
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            visit(SetPartition(n, blocks));
            return;
        }
        // Index, not a range-for: deeper levels grow `blocks` and would
        // invalidate any reference held across the recursive call.
        const std::size_t existing = blocks.size();
        for (std::size_t bi = 0; bi < existing; ++bi) {
            if (i - blocks[bi].back() >= m) {
                blocks[bi].push_back(i);
                self(self, i + 1);
                blocks[bi].pop_back();
            }
        }
        blocks.push_back({i});
        self(self, i + 1);
        blocks.pop_back();
    };
    rec(rec, 1);
}

}  // namespace

void gen_partitions(int n, const PartitionVisitor& visit) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    gen_partitions_impl(n, 1, visit);
}

void gen_sparse_partitions(int n, int m, const PartitionVisitor& visit) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (m < 1) throw std::invalid_argument("sparseness must be at least 1");
    gen_partitions_impl(n, m, visit);
}

void gen_interval_partitions(int n, std::optional<int> max_len,
                             const CompositionVisitor& visit) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (max_len && *max_len < 1) throw std::invalid_argument("max_len must be at least 1");
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            visit(IntervalPartition(parts));
            return;
        }
        const int top = max_len ? std::min(*max_len, rem) : rem;
        for (int len = 1; len <= top; ++len) {
            parts.push_back(len);
            self(self, rem - len);
            parts.pop_back();
        }
    };
    rec(rec, n);
}

void gen_orthogonal_pairs(int n, const PairVisitor& visit) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    gen_interval_partitions(n, std::nullopt, [&](const IntervalPartition& q) {
        std::vector<int> iv(static_cast<std::size_t>(n) + 1);
        for (int i = 1; i <= n; ++i) iv[static_cast<std::size_t>(i)] = q.interval_of(i);
        std::vector<std::vector<int>> blocks;
        // Same restricted-growth recursion, pruned so no block takes two
        // elements of one interval. Block elements ascend, so only the last
        // one can share an interval with the newcomer.
        auto rec = [&](auto&& self, int i) -> void {
            if (i > n) {
                visit(OrthogonalPair(q, SetPartition(n, blocks)));
                return;
            }
            // Indexed for the same reason as in gen_partitions_impl.
            const std::size_t existing = blocks.size();
            for (std::size_t bi = 0; bi < existing; ++bi) {
                if (iv[static_cast<std::size_t>(blocks[bi].back())] !=
                    iv[static_cast<std::size_t>(i)]) {
                    blocks[bi].push_back(i);
                    self(self, i + 1);
                    blocks[bi].pop_back();
                }
            }
            blocks.push_back({i});
            self(self, i + 1);
            blocks.pop_back();
        };
        rec(rec, 1);
    });
}

void gen_words(int r, int n, std::optional<int> sparseness, const WordVisitor& visit) {
    if (r < 1) throw std::invalid_argument("alphabet size must be at least 1");
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    if (sparseness && *sparseness < 1) throw std::invalid_argument("sparseness must be at least 1");
    const int k = sparseness ? *sparseness : 1;
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == n) {
            visit(word);
            return;
        }
        for (int c = 1; c <= r; ++c) {
            bool clash = false;
            const int back = std::min<int>(k - 1, static_cast<int>(word.size()));
            for (int d = 1; d <= back; ++d)
                if (word[word.size() - static_cast<std::size_t>(d)] == c) { clash = true; break; }
            if (clash) continue;
            word.push_back(c);
            self(self);
            word.pop_back();
        }
    };
    rec(rec);
}

MatrixFlags MatrixFlags::from_bits(const std::string& bits) {
    if (bits.size() != 4 || bits.find_first_not_of("01") != std::string::npos)
        throw std::invalid_argument("flags must be four binary digits, e.g. \"0111\"");
    MatrixFlags f;
    f.rows_ordered = bits[0] == '1';
    f.rows_repeatable = bits[1] == '1';
    f.cols_ordered = bits[2] == '1';
    f.cols_repeatable = bits[3] == '1';
    return f;
}

std::string MatrixFlags::bits() const {
    std::string s(4, '0');
    if (rows_ordered) s[0] = '1';
    if (rows_repeatable) s[1] = '1';
    if (cols_ordered) s[2] = '1';
    if (cols_repeatable) s[3] = '1';
    return s;
}

namespace {

std::vector<std::vector<int>> all_permutations(int b) {
    std::vector<int> p(static_cast<std::size_t>(b));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::uint32_t apply_perm(std::uint32_t mask, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    for (std::size_t c = 0; c < perm.size(); ++c)
        if (mask & (std::uint32_t(1) << c)) out |= std::uint32_t(1) << perm[c];
    return out;
}

BigInt factorial_int(int a) {
    BigInt f = 1;
    for (int i = 2; i <= a; ++i) f *= i;
    return f;
}

}  // namespace

BigInt count_matrices(int n, MatrixFlags flags) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (flags.cols_ordered ? n > 10 : n > 6)
        throw std::invalid_argument(
            "matrix census supports n <= 10 (ordered columns) or n <= 6 (unordered)");
    BigInt total = 0;
    for (int b = 1; b <= n; ++b) {  // number of columns
        const std::uint32_t full = (std::uint32_t(1) << b) - 1;
        const auto perms = flags.cols_ordered ? std::vector<std::vector<int>>{}
                                              : all_permutations(b);
        std::set<std::vector<std::uint32_t>> canon;  // for unordered columns
        std::vector<std::uint32_t> rows;

        auto handle = [&](const std::vector<std::uint32_t>& sorted_rows) {
            // No empty column.
            std::uint32_t cover = 0;
            for (std::uint32_t m : sorted_rows) cover |= m;
            if (cover != full) return;
            // All columns distinct, if required. Column equality does not
            // depend on row order (reordering rows permutes both columns the
            // same way), so the sorted sequence is a fair witness.
            if (!flags.cols_repeatable) {
                for (int c1 = 0; c1 < b; ++c1)
                    for (int c2 = c1 + 1; c2 < b; ++c2) {
                        bool equal = true;
                        for (std::uint32_t m : sorted_rows)
                            if (((m >> c1) & 1u) != ((m >> c2) & 1u)) { equal = false; break; }
                        if (equal) return;
                    }
            }
            const int a = static_cast<int>(sorted_rows.size());
            if (flags.cols_ordered) {
                if (!flags.rows_ordered) {
                    total += 1;
                } else {
                    // Distinct row sequences of this multiset: a! / prod(mult!).
                    BigInt ways = factorial_int(a);
                    int run = 1;
                    for (int t = 1; t <= a; ++t) {
                        if (t < a && sorted_rows[static_cast<std::size_t>(t)] ==
                                         sorted_rows[static_cast<std::size_t>(t - 1)]) {
                            ++run;
                        } else {
                            ways /= factorial_int(run);
                            run = 1;
                        }
                    }
                    total += ways;
                }
            } else if (!flags.rows_ordered) {
                // Canonical form: least column-permuted image of the row multiset.
                std::vector<std::uint32_t> best;
                for (const auto& perm : perms) {
                    std::vector<std::uint32_t> img;
                    img.reserve(sorted_rows.size());
                    for (std::uint32_t m : sorted_rows) img.push_back(apply_perm(m, perm));
                    std::sort(img.begin(), img.end());
                    if (best.empty() || img < best) best = std::move(img);
                }
                canon.insert(best);
            } else {
                // Rows are a sequence: canonicalize every distinct ordering.
                std::vector<std::uint32_t> order = sorted_rows;
                do {
                    std::vector<std::uint32_t> best;
                    for (const auto& perm : perms) {
                        std::vector<std::uint32_t> img;
                        img.reserve(order.size());
                        for (std::uint32_t m : order) img.push_back(apply_perm(m, perm));
                        if (best.empty() || img < best) best = std::move(img);
                    }
                    canon.insert(best);
                } while (std::next_permutation(order.begin(), order.end()));
            }
        };

        // Nondecreasing sequences of nonzero row masks with popcounts summing
        // to n (strictly increasing when equal rows are forbidden).
        auto rec = [&](auto&& self, std::uint32_t from, int rem) -> void {
            if (rem == 0) {
                handle(rows);
                return;
            }
            for (std::uint32_t m = from; m <= full; ++m) {
                if (std::popcount(m) > rem) continue;
                rows.push_back(m);
                self(self, flags.rows_repeatable ? m : m + 1, rem - std::popcount(m));
                rows.pop_back();
            }
        };
        rec(rec, 1, n);
        if (!flags.cols_ordered) total += BigInt(canon.size());
    }
    return total;
}

}  // namespace setsys
