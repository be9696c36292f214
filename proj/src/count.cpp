#include "setsys/count.hpp"

#include <stdexcept>

namespace setsys {

namespace {

// n choose k where n is already a big value and k is small; product form with
// stepwise exact division (each prefix product of j consecutive integers is
// divisible by j!).
BigInt binomial_big(const BigInt& n, long long k) {
    if (k < 0) return 0;
    BigInt r = 1;
    for (long long t = 0; t < k; ++t) {
        r *= n - t;
        r /= t + 1;
    }
    return r;
}

std::vector<BigInt> factorials(int n) {
    std::vector<BigInt> f(static_cast<std::size_t>(n) + 1);
    f[0] = 1;
    for (int i = 1; i <= n; ++i) f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i - 1)] * i;
    return f;
}

}  // namespace

BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: arguments must be nonnegative");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    return binomial_big(BigInt(n), k);
}

std::vector<BigInt> bell_row(int n) {
    if (n < 0) throw std::invalid_argument("bell: n must be nonnegative");
    std::vector<BigInt> b;
    b.reserve(static_cast<std::size_t>(n) + 1);
    b.emplace_back(1);
    std::vector<BigInt> row{BigInt(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const BigInt& x : row) next.push_back(next.back() + x);
        row = std::move(next);
        b.push_back(row.front());
    }
    return b;
}

BigInt bell(int n) { return bell_row(n).back(); }

BigInt bell_sparse(int n, int m) {
    if (n < 1) throw std::invalid_argument("bell_sparse: n must be positive");
    if (m < 1) throw std::invalid_argument("bell_sparse: m must be positive");
    if (m > n) return 1;  // only the all-singletons partition is m-sparse
    return bell(n - m + 1);
}

std::vector<BigRat> interval_coeff_row(int n, std::optional<int> k) {
    if (n < 0) throw std::invalid_argument("interval_coeff: n must be nonnegative");
    if (k && *k < 1) throw std::invalid_argument("interval_coeff: k must be positive");
    const auto fact = factorials(n);
    std::vector<BigRat> coef(static_cast<std::size_t>(n) + 1);
    coef[0] = 1;
    for (int t = 1; t <= n; ++t) {
        int top = k ? std::min(*k, t) : t;
        BigRat sum = 0;
        for (int i = 1; i <= top; ++i)
            sum += coef[static_cast<std::size_t>(t - i)] / BigRat(fact[static_cast<std::size_t>(i)]);
        coef[static_cast<std::size_t>(t)] = sum;
    }
    return coef;
}

BigRat interval_coeff(int n, std::optional<int> k) {
    return interval_coeff_row(n, k).back();
}

BigInt fubini(int n) {
    if (n < 0) throw std::invalid_argument("fubini: n must be nonnegative");
    std::vector<BigInt> s;
    s.reserve(static_cast<std::size_t>(n) + 1);
    s.emplace_back(1);
    std::vector<BigInt> pascal{BigInt(1)};  // row t of C(t, .)
    for (int t = 1; t <= n; ++t) {
        std::vector<BigInt> next(static_cast<std::size_t>(t) + 1, BigInt(1));
        for (int j = 1; j < t; ++j)
            next[static_cast<std::size_t>(j)] =
                pascal[static_cast<std::size_t>(j - 1)] + pascal[static_cast<std::size_t>(j)];
        pascal = std::move(next);
        BigInt total = 0;
        for (int j = 1; j <= t; ++j)
            total += pascal[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(t - j)];
        s.push_back(std::move(total));
    }
    return s.back();
}

BigInt sparse_words(int r, int k, int n) {
    if (r < 1 || k < 1 || n < 0)
        throw std::invalid_argument("sparse_words: need r >= 1, k >= 1, n >= 0");
    if (n == 0) return 1;
    // First min(k-1, n) letters must all be distinct: falling factorial.
    BigInt result = 1;
    const int head = std::min(k - 1, n);
    for (int t = 0; t < head; ++t) {
        const long long factor = static_cast<long long>(r) - t;
        if (factor <= 0) return 0;
        result *= factor;
    }
    if (n < k) return result;
    const long long base = static_cast<long long>(r) - (k - 1);
    if (base <= 0) return 0;
    return result * boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(n - k + 1));
}

BigInt count_exact(int n, bool simple_only) {
    if (n < 0) throw std::invalid_argument("count_exact: n must be nonnegative");
    if (n == 0) return 1;
    // For j available vertices, the generating function over weight of all
    // (unnormalized) systems is the product over edge sizes s of
    //   (1 + x^s)^C(j,s)          when repeated edges are forbidden,
    //   (1 - x^s)^-C(j,s)         when repeats are allowed;
    // each factor expands by the (generalized) binomial theorem. The count of
    // systems covering all j vertices then follows by inclusion-exclusion over
    // vertex subsets, and summing over the vertex count m gives the total.
    std::vector<BigInt> coef_n(static_cast<std::size_t>(n) + 1);  // coef_n[j] = [x^n] G_j
    coef_n[0] = (n == 0) ? 1 : 0;
    for (int j = 1; j <= n; ++j) {
        std::vector<BigInt> poly(static_cast<std::size_t>(n) + 1);
        poly[0] = 1;
        for (int s = 1; s <= std::min(j, n); ++s) {
            const BigInt c = binomial(j, s);
            // multiply poly by the size-s factor, truncated at degree n
            std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
            for (int t = 0; t * s <= n; ++t) {
                const BigInt mult = simple_only ? binomial_big(c, t)          // C(c, t)
                                                : binomial_big(c + t - 1, t); // multichoose
                if (mult == 0) continue;
                for (int d = 0; d + t * s <= n; ++d) {
                    if (poly[static_cast<std::size_t>(d)] == 0) continue;
                    out[static_cast<std::size_t>(d + t * s)] +=
                        poly[static_cast<std::size_t>(d)] * mult;
                }
            }
            poly = std::move(out);
        }
        coef_n[static_cast<std::size_t>(j)] = poly[static_cast<std::size_t>(n)];
    }
    BigInt total = 0;
    for (int m = 1; m <= n; ++m) {
        BigInt onto = 0;  // systems of weight n whose vertex set is exactly [m]
        for (int j = 0; j <= m; ++j) {
            const BigInt term = binomial(m, j) * coef_n[static_cast<std::size_t>(j)];
            if ((m - j) % 2 == 0)
                onto += term;
            else
                onto -= term;
        }
        total += onto;
    }
    return total;
}

void CountTable::append(int n, CountValue value) {
    if (!rows.empty() && n <= rows.back().first)
        throw std::invalid_argument("CountTable rows must have strictly increasing n");
    rows.emplace_back(n, std::move(value));
}

std::string to_string(const CountValue& v) {
    return std::visit([](const auto& x) { return x.str(); }, v);
}

}  // namespace setsys
