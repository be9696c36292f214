#include "setsys/asymptotics.hpp"

#include "setsys/enumerate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace setsys {

namespace {

// Bisection to (near) machine width, then a few Newton steps to polish. The
// bracket must straddle the root.
template <typename F, typename DF>
RootResult solve(double lo, double hi, F f, DF df) {
    int iterations = 0;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // ran out of doubles
        ++iterations;
        if (f(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 5; ++i) {
        const double d = df(x);
        if (d == 0.0) break;
        const double next = x - f(x) / d;
        if (!std::isfinite(next)) break;
        x = next;
        ++iterations;
    }
    return {x, f(x), iterations};
}

}  // namespace

RootResult alpha(int k) {
    if (k < 1) throw std::invalid_argument("alpha: k must be at least 1");
    if (k == 1) return {1.0, 0.0, 0};
    auto f = [k](double x) {
        double term = 1.0, sum = 0.0;
        for (int i = 1; i <= k; ++i) {
            term *= x / i;
            sum += term;
        }
        return sum - 1.0;
    };
    auto df = [k](double x) {
        double term = 1.0, sum = 1.0;  // i = 1 contributes 1
        for (int i = 1; i < k; ++i) {
            term *= x / i;
            sum += term;
        }
        return sum;
    };
    // The root lies in (log 2, 1); f(0.5) <= e^0.5 - 2 < 0 and f(1) > 0 for k >= 2.
    return solve(0.5, 1.0, f, df);
}

RootResult lambda_root(long long n) {
    if (n < 1) throw std::invalid_argument("lambda_root: n must be positive");
    const double dn = static_cast<double>(n);
    auto f = [dn](double x) { return x * std::log(x) - dn; };
    auto df = [](double x) { return std::log(x) + 1.0; };
    return solve(1.0, dn + 2.0, f, df);
}

RootResult xi_root(long long n) {
    if (n < 1) throw std::invalid_argument("xi_root: n must be positive");
    const double ln_n = std::log(static_cast<double>(n));
    // Solve the log form ln x + x = ln n (same root, far better conditioned),
    // then report the residual of the defining equation itself.
    auto g = [ln_n](double x) { return std::log(x) + x - ln_n; };
    auto dg = [](double x) { return 1.0 / x + 1.0; };
    RootResult r = solve(1e-12, ln_n + 2.0, g, dg);
    r.residual = r.value * std::exp(r.value) - static_cast<double>(n);
    return r;
}

AsymptoticReport bell_estimate(int n) {
    if (n < 1) throw std::invalid_argument("bell_estimate: n must be positive");
    const double lam = lambda_root(n).value;
    const double log_est = (n + 0.5) * std::log(lam) - 0.5 * std::log(static_cast<double>(n)) -
                           (n + 1.0 - lam);
    const BigInt exact = bell(n);
    const double ratio = std::exp(log_est - log_of(exact));
    return {n, BigRat(exact), std::exp(log_est), log_est, ratio};
}

BellRatioReport bell_ratio(int n, int m) {
    if (n < 2) throw std::invalid_argument("bell_ratio: n must be at least 2");
    if (m < 1 || m > n) throw std::invalid_argument("bell_ratio: need 1 <= m <= n");
    const auto row = bell_row(n);
    BellRatioReport rep;
    rep.n = n;
    rep.m = m;
    rep.exact = BigRat(row[static_cast<std::size_t>(n - m)], row[static_cast<std::size_t>(n)]);
    rep.coarse = std::pow(std::log(static_cast<double>(n)) / n, m);
    rep.refined = std::pow(xi_root(n).value / n, m);
    const double exact_d = to_double(rep.exact);
    rep.ratio_coarse = rep.coarse / exact_d;
    rep.ratio_refined = rep.refined / exact_d;
    return rep;
}

SandwichReport verify_sandwich(int n, std::optional<int> k) {
    if (n < 1) throw std::invalid_argument("verify_sandwich: n must be positive");
    if (k && *k < 1) throw std::invalid_argument("verify_sandwich: k must be positive");
    SandwichReport rep;
    rep.n = n;
    rep.k = k;
    const BigRat coeff = interval_coeff(n, k);
    if (k) {
        rep.lower = coeff * BigRat(bell_sparse(n, *k));
        rep.middle = count_set_systems({n, false, k});
    } else {
        rep.lower = 0;
        rep.middle = count_exact(n, false);
    }
    rep.upper = 2 * coeff * BigRat(bell(n));
    const BigRat mid(rep.middle);
    rep.holds = rep.lower <= mid && mid <= rep.upper;
    return rep;
}

AsymptoticReport interval_coeff_estimate(int k, int n) {
    if (k < 1) throw std::invalid_argument("interval_coeff_estimate: k must be positive");
    if (n < 1) throw std::invalid_argument("interval_coeff_estimate: n must be positive");
    const double a = alpha(k).value;
    // D(x) = 1 - sum x^i/i!; the estimate is the residue term c_k a^{-n}.
    double term = 1.0, dsum = 0.0;
    for (int i = 1; i <= k; ++i) {
        dsum += term;  // a^{i-1} / (i-1)!
        term *= a / i;
    }
    const double c = 1.0 / (a * dsum);
    const double log_est = std::log(c) - n * std::log(a);
    const BigRat exact = interval_coeff(n, k);
    const double ratio = std::exp(log_est - log_of(exact));
    return {n, exact, std::exp(log_est), log_est, ratio};
}

AsymptoticReport fubini_estimate(int n) {
    if (n < 1) throw std::invalid_argument("fubini_estimate: n must be positive");
    const double ln2 = std::numbers::ln2;
    const double log_est = -std::log(2.0 * ln2) - n * std::log(ln2) +
                           std::lgamma(static_cast<double>(n) + 1.0);
    const BigInt exact = fubini(n);
    const double ratio = std::exp(log_est - log_of(exact));
    return {n, BigRat(exact), std::exp(log_est), log_est, ratio};
}

CountTable simple_share(int max_n) {
    if (max_n < 1) throw std::invalid_argument("simple_share: max_n must be positive");
    CountTable table;
    table.family = "simple-share";
    for (int n = 1; n <= max_n; ++n) {
        BigRat share(count_exact(n, true), count_exact(n, false));
        if (share < BigRat(1, 2) || share > 1)
            throw std::logic_error("simple share left the proven bracket [1/2, 1]");
        table.append(n, share);
    }
    return table;
}

std::map<std::string, double> reference_constants() {
    const double ln2 = std::numbers::ln2;
    return {
        {"log2", ln2},
        {"1/log2", 1.0 / ln2},
        {"2log2", 2.0 * ln2},
        {"1/(2log2)", 1.0 / (2.0 * ln2)},
        {"e", std::numbers::e},
    };
}

}  // namespace setsys
