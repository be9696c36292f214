#pragma once

#include "setsys/bignum.hpp"
#include "setsys/count.hpp"

#include <map>
#include <optional>
#include <string>

namespace setsys {

struct RootResult {
    double value = 0.0;
    double residual = 0.0;  // defining equation evaluated at value
    int iterations = 0;
};

// alpha_k: the unique root in (0, 1] of sum_{i=1..k} x^i / i! = 1.
// alpha_1 == 1 exactly; the sequence decreases to log 2 as k grows.
RootResult alpha(int k);

// lambda(n): positive solution of lambda * ln(lambda) = n.
RootResult lambda_root(long long n);

// xi(n): positive solution of xi * e^xi = n.
RootResult xi_root(long long n);

struct AsymptoticReport {
    long long n = 0;
    BigRat exact;
    double estimate = 0.0;      // exp(log_estimate); +inf once past double range
    double log_estimate = 0.0;  // natural log of the estimate, always finite
    double ratio = 0.0;         // estimate / exact, evaluated in log space
};

// Smooth form lambda^(n + 1/2) / (sqrt(n) * e^(n + 1 - lambda)) against bell(n).
AsymptoticReport bell_estimate(int n);

struct BellRatioReport {
    int n = 0;
    int m = 0;
    BigRat exact;          // bell(n - m) / bell(n)
    double coarse = 0.0;   // (ln n / n)^m
    double refined = 0.0;  // (xi(n) / n)^m
    double ratio_coarse = 0.0;
    double ratio_refined = 0.0;
};
BellRatioReport bell_ratio(int n, int m);

struct SandwichReport {
    int n = 0;
    std::optional<int> k;
    BigRat lower;
    BigInt middle;
    BigRat upper;
    bool holds = false;
};

// Exact two-sided bound check for the degree-bounded multiset count:
//   i_{n,k} * bell_sparse(n, k)  <=  count  <=  2 * i_{n,k} * bell(n).
// Without k the count is unbounded-degree, the lower bound is the trivial 0
// and the upper uses unbounded coefficients. All comparisons are exact.
SandwichReport verify_sandwich(int n, std::optional<int> k);

// i_{n,k} against c_k * alpha_k^(-n), c_k = -1 / (alpha_k * D'(alpha_k)) for
// D(x) = 1 - sum_{i=1..k} x^i / i!.
AsymptoticReport interval_coeff_estimate(int k, int n);

// fubini(n) against n! / (2 ln 2 * (ln 2)^n).
AsymptoticReport fubini_estimate(int n);

// Share of simple systems: count_exact(n, true) / count_exact(n, false) for
// n = 1..max_n. Proven to stay within [1/2, 1]; violations throw.
CountTable simple_share(int max_n);

// Named constants checks compare against: ln 2 and friends.
std::map<std::string, double> reference_constants();

}  // namespace setsys
