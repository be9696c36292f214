#pragma once

#include "setsys/bignum.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace setsys {

// Binomial coefficient for small nonnegative arguments (exact).
BigInt binomial(long long n, long long k);

// Number of partitions of an n-set (triangle recurrence; no global caches,
// safe to call concurrently). bell(0) == 1.
BigInt bell(int n);

// All of bell(0..n) from one triangle pass.
std::vector<BigInt> bell_row(int n);

// Partitions of {1..n} in which elements of a common block differ by >= m.
// Equals bell(n - m + 1) for m <= n and 1 otherwise.
BigInt bell_sparse(int n, int m);

// Coefficients i_n defined by i_0 = 1, i_n = sum_{i=1..min(k,n)} i_{n-i} / i!.
// Absent k means unbounded part sizes.
BigRat interval_coeff(int n, std::optional<int> k = std::nullopt);
std::vector<BigRat> interval_coeff_row(int n, std::optional<int> k = std::nullopt);

// Ordered set partitions of an n-set: s_n = sum_{j=1..n} C(n,j) s_{n-j}, s_0 = 1.
BigInt fubini(int n);

// Length-n words over an r-letter alphabet in which any k consecutive
// positions are pairwise distinct, counted by the closed product formula
// r (r-1) ... (r-k+2) (r-k+1)^(n-k+1); degenerates to the falling factorial
// when n < k, and to 0 as soon as a factor vanishes.
BigInt sparse_words(int r, int k, int n);

// Exact number of normalized systems of total weight n via inclusion-exclusion
// over the number of vertices: simple_only selects systems without repeated
// edges. count_exact(0, *) == 1 (the empty system).
BigInt count_exact(int n, bool simple_only);

// A labeled sequence of exact values, one per weight/size parameter n.
using CountValue = std::variant<BigInt, BigRat>;

struct CountTable {
    std::string family;
    std::vector<std::pair<std::string, std::string>> params;  // e.g. {"k","2"}
    std::vector<std::pair<int, CountValue>> rows;

    // Rows must arrive with strictly increasing n.
    void append(int n, CountValue value);
};

std::string to_string(const CountValue& v);

}  // namespace setsys
