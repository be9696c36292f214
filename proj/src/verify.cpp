#include "setsys/verify.hpp"

#include "setsys/asymptotics.hpp"
#include "setsys/bijections.hpp"
#include "setsys/count.hpp"
#include "setsys/enumerate.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace setsys {

namespace {

// Frozen reference counts for weights 1..10: all systems, simple systems,
// and set partitions.
constexpr long long kRefMultiset[] = {1, 3, 10, 41, 192, 1025, 6087, 39754, 282241, 2159916};
constexpr long long kRefSimple[] = {1, 2, 7, 28, 134, 729, 4408, 29256, 210710, 1633107};
constexpr long long kRefBell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};  // bell(0..10)

std::string show(int n, const std::string& lhs, const std::string& rhs) {
    std::ostringstream os;
    os << "n=" << n << ": " << lhs << " vs " << rhs;
    return os.str();
}

CheckResult check(std::string name, bool pass, std::string detail) {
    return {std::move(name), pass, std::move(detail)};
}

}  // namespace

std::vector<CheckResult> verify_roundtrip(int max_n) {
    std::vector<CheckResult> out;
    long long pairs = 0, systems = 0;
    std::string bad;
    for (int n = 1; n <= max_n && bad.empty(); ++n) {
        gen_orthogonal_pairs(n, [&](const OrthogonalPair& qp) {
            if (!bad.empty()) return;
            ++pairs;
            const SetSystem h = pair_to_system(qp);
            const OrthogonalPair rep = system_to_pair(h);
            if (pair_to_system(rep) != h)
                bad = show(n, "trace of canonical section", "original trace");
        });
    }
    out.push_back(check("pair space: trace of the canonical section reproduces the trace",
                        bad.empty(),
                        bad.empty() ? "all " + std::to_string(pairs) + " pairs, weight <= " +
                                          std::to_string(max_n)
                                    : bad));
    bad.clear();
    for (int n = 1; n <= max_n && bad.empty(); ++n) {
        gen_set_systems({n, false, std::nullopt}, [&](const SetSystem& h) {
            if (!bad.empty()) return;
            ++systems;
            if (pair_to_system(system_to_pair(h)) != h)
                bad = show(n, h.to_json(), "its section's trace");
        });
    }
    out.push_back(check("every normalized system is the trace of its canonical section",
                        bad.empty(),
                        bad.empty() ? "all " + std::to_string(systems) + " systems, weight <= " +
                                          std::to_string(max_n)
                                    : bad));
    return out;
}

std::vector<CheckResult> verify_classes(int max_n) {
    std::vector<CheckResult> out;
    bool partition_ok = true, law_ok = true;
    std::string partition_detail, law_detail;
    for (int n = 1; n <= max_n; ++n) {
        BigInt class_total = 0;
        gen_set_systems({n, false, std::nullopt}, [&](const SetSystem& h) {
            const EquivClass cls = class_of(system_to_pair(h));
            class_total += cls.size;
            const BigInt bound = class_size_bound(cls.representative);
            const bool simple = is_simple(h);
            if (cls.size > bound || (simple && cls.size != bound) ||
                (!simple && cls.size == bound)) {
                law_ok = false;
                if (law_detail.empty())
                    law_detail = show(n, "class size " + cls.size.str(),
                                      "bound " + bound.str() + (simple ? " (simple)" : " (non-simple)"));
            }
        });
        long long pair_count = 0;
        gen_orthogonal_pairs(n, [&](const OrthogonalPair&) { ++pair_count; });
        if (class_total != pair_count) {
            partition_ok = false;
            if (partition_detail.empty())
                partition_detail =
                    show(n, "sum of class sizes " + class_total.str(),
                         "pair count " + std::to_string(pair_count));
        }
    }
    out.push_back(check("class sizes sum to the pair-space size", partition_ok,
                        partition_ok ? "weight <= " + std::to_string(max_n) : partition_detail));
    out.push_back(check(
        "class size meets its factorial bound exactly on simple traces", law_ok,
        law_ok ? "weight <= " + std::to_string(max_n) : law_detail));
    return out;
}

std::vector<CheckResult> verify_injection(int max_n) {
    std::vector<CheckResult> out;
    bool image_ok = true, inject_ok = true, invert_ok = true, reject_ok = true, count_ok = true;
    std::string image_d, inject_d, invert_d, reject_d, count_d;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<SetSystem> simple_sys, multi_sys;
        gen_set_systems({n, false, std::nullopt}, [&](const SetSystem& h) {
            (is_simple(h) ? simple_sys : multi_sys).push_back(h);
        });
        std::set<SetSystem> images;
        for (const SetSystem& h : multi_sys) {
            const SetSystem img = inject_nonsimple(h);
            if (!is_simple(img) || weight(img) != n || !is_normalized(img)) {
                image_ok = false;
                if (image_d.empty()) image_d = show(n, h.to_json(), "produced a bad image");
            }
            images.insert(img);
            try {
                if (recover_nonsimple(img) != h) {
                    invert_ok = false;
                    if (invert_d.empty()) invert_d = show(n, img.to_json(), "recovered wrong system");
                }
            } catch (const NotInImageError&) {
                invert_ok = false;
                if (invert_d.empty()) invert_d = show(n, img.to_json(), "image rejected");
            }
        }
        if (images.size() != multi_sys.size()) {
            inject_ok = false;
            if (inject_d.empty())
                inject_d = show(n, std::to_string(images.size()) + " images",
                                std::to_string(multi_sys.size()) + " non-simple systems");
        }
        for (const SetSystem& h : simple_sys) {
            const bool in_image = images.count(h) > 0;
            try {
                const SetSystem back = recover_nonsimple(h);
                if (!in_image || inject_nonsimple(back) != h) {
                    reject_ok = false;
                    if (reject_d.empty())
                        reject_d = show(n, h.to_json(), "recovery succeeded off the image");
                }
            } catch (const NotInImageError&) {
                if (in_image) {
                    reject_ok = false;
                    if (reject_d.empty()) reject_d = show(n, h.to_json(), "image rejected");
                }
            }
        }
        if (2 * simple_sys.size() < simple_sys.size() + multi_sys.size()) {
            count_ok = false;
            if (count_d.empty())
                count_d = show(n, std::to_string(simple_sys.size() + multi_sys.size()) + " total",
                               "2 * " + std::to_string(simple_sys.size()) + " simple");
        }
    }
    const std::string range = "weight <= " + std::to_string(max_n);
    out.push_back(check("injection lands on normalized simple systems of equal weight",
                        image_ok, image_ok ? range : image_d));
    out.push_back(check("injection is injective", inject_ok, inject_ok ? range : inject_d));
    out.push_back(check("recovery inverts the injection", invert_ok, invert_ok ? range : invert_d));
    out.push_back(check("recovery succeeds exactly on the image", reject_ok,
                        reject_ok ? range : reject_d));
    out.push_back(check("total count at most twice the simple count", count_ok,
                        count_ok ? range : count_d));
    return out;
}

std::vector<CheckResult> verify_sparse(int max_n) {
    std::vector<CheckResult> out;
    bool expand_ok = true, reduce_ok = true, count_ok = true;
    std::string expand_d, reduce_d, count_d;
    for (int n = 2; n <= max_n; ++n) {
        gen_partitions(n - 1, [&](const SetPartition& p) {
            const SetPartition up = sparse_expand(p);
            if (up.ground_size() != n || !up.is_sparse(2) || sparse_reduce(up) != p) {
                expand_ok = false;
                if (expand_d.empty()) expand_d = show(n, "expand/reduce roundtrip", "failed");
            }
        });
        gen_sparse_partitions(n, 2, [&](const SetPartition& p) {
            const SetPartition down = sparse_reduce(p);
            if (down.ground_size() != n - 1 || sparse_expand(down) != p) {
                reduce_ok = false;
                if (reduce_d.empty()) reduce_d = show(n, "reduce/expand roundtrip", "failed");
            }
        });
        for (int m = 1; m <= n; ++m) {
            long long generated = 0;
            gen_sparse_partitions(n, m, [&](const SetPartition&) { ++generated; });
            if (BigInt(generated) != bell_sparse(n, m)) {
                count_ok = false;
                if (count_d.empty())
                    count_d = show(n, "m=" + std::to_string(m) + " generated " +
                                          std::to_string(generated),
                                   bell_sparse(n, m).str());
            }
        }
    }
    const std::string range = "n <= " + std::to_string(max_n);
    out.push_back(check("expand then reduce is the identity (and lands 2-sparse)", expand_ok,
                        expand_ok ? range : expand_d));
    out.push_back(check("reduce then expand is the identity on 2-sparse partitions", reduce_ok,
                        reduce_ok ? range : reduce_d));
    out.push_back(check("m-sparse partition count equals bell(n-m+1)", count_ok,
                        count_ok ? range : count_d));
    return out;
}

std::vector<CheckResult> verify_sandwich_suite(int max_n) {
    std::vector<CheckResult> out;
    bool bounded_ok = true, free_ok = true;
    std::string bounded_d, free_d;
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= 4; ++k) {
            const SandwichReport rep = verify_sandwich(n, k);
            if (!rep.holds) {
                bounded_ok = false;
                if (bounded_d.empty())
                    bounded_d = show(n, "k=" + std::to_string(k) + " middle " + rep.middle.str(),
                                     "[" + rep.lower.str() + ", " + rep.upper.str() + "]");
            }
        }
        const SandwichReport rep = verify_sandwich(n, std::nullopt);
        if (!rep.holds) {
            free_ok = false;
            if (free_d.empty())
                free_d = show(n, "middle " + rep.middle.str(), "upper " + rep.upper.str());
        }
    }
    const std::string range = "n <= " + std::to_string(max_n) + ", k in 1..4";
    out.push_back(check("degree-bounded count sits inside its exact sandwich", bounded_ok,
                        bounded_ok ? range : bounded_d));
    out.push_back(check("unbounded count respects its exact upper bound", free_ok,
                        free_ok ? "n <= " + std::to_string(max_n) : free_d));
    return out;
}

std::vector<CheckResult> verify_tables(int max_n) {
    std::vector<CheckResult> out;
    bool cross_ok = true, ref_ok = true, ineq_ok = true, bell_ok = true;
    std::string cross_d, ref_d, ineq_d, bell_d;
    for (int n = 1; n <= max_n; ++n) {
        const BigInt all_exact = count_exact(n, false);
        const BigInt simple_exact = count_exact(n, true);
        const BigInt all_gen = count_set_systems({n, false, std::nullopt});
        const BigInt simple_gen = count_set_systems({n, true, std::nullopt});
        if (all_exact != all_gen || simple_exact != simple_gen) {
            cross_ok = false;
            if (cross_d.empty())
                cross_d = show(n, all_exact.str() + "/" + simple_exact.str(),
                               all_gen.str() + "/" + simple_gen.str());
        }
        if (n <= 10) {
            if (all_exact != kRefMultiset[n - 1] || simple_exact != kRefSimple[n - 1]) {
                ref_ok = false;
                if (ref_d.empty())
                    ref_d = show(n, all_exact.str() + "/" + simple_exact.str(), "reference row");
            }
        }
        if (!(simple_exact <= all_exact && all_exact <= 2 * simple_exact)) {
            ineq_ok = false;
            if (ineq_d.empty())
                ineq_d = show(n, simple_exact.str(), all_exact.str());
        }
    }
    for (int n = 0; n <= 10; ++n) {
        if (bell(n) != kRefBell[n]) {
            bell_ok = false;
            if (bell_d.empty()) bell_d = show(n, bell(n).str(), std::to_string(kRefBell[n]));
        }
    }
    const std::string range = "n <= " + std::to_string(max_n);
    out.push_back(check("exhaustive generation matches the inclusion-exclusion counter",
                        cross_ok, cross_ok ? range : cross_d));
    out.push_back(check("counts match the frozen reference rows", ref_ok,
                        ref_ok ? "n <= 10" : ref_d));
    out.push_back(check("simple <= all <= 2 * simple", ineq_ok, ineq_ok ? range : ineq_d));
    out.push_back(check("bell numbers match the frozen row", bell_ok, bell_ok ? "n <= 10" : bell_d));
    return out;
}

std::vector<CheckResult> verify_words(int max_r, int max_k, int max_n) {
    std::vector<CheckResult> out;
    bool formula_ok = true, fubini_ok = true;
    std::string formula_d, fubini_d;
    for (int r = 1; r <= max_r; ++r)
        for (int k = 1; k <= max_k; ++k)
            for (int n = 0; n <= max_n; ++n) {
                long long generated = 0;
                gen_words(r, n, k, [&](const std::vector<int>&) { ++generated; });
                if (BigInt(generated) != sparse_words(r, k, n)) {
                    formula_ok = false;
                    if (formula_d.empty())
                        formula_d = "r=" + std::to_string(r) + " k=" + std::to_string(k) +
                                    " n=" + std::to_string(n) + ": generated " +
                                    std::to_string(generated) + " vs formula " +
                                    sparse_words(r, k, n).str();
                }
            }
    BigInt fact = 1;
    for (int n = 1; n <= 15; ++n) {
        fact *= n;
        if (BigRat(fubini(n)) != BigRat(fact) * interval_coeff(n)) {
            fubini_ok = false;
            if (fubini_d.empty())
                fubini_d = show(n, fubini(n).str(), (BigRat(fact) * interval_coeff(n)).str());
        }
    }
    out.push_back(check("window-distinct word formula matches direct generation", formula_ok,
                        formula_ok ? "r <= " + std::to_string(max_r) + ", k <= " +
                                         std::to_string(max_k) + ", n <= " + std::to_string(max_n)
                                   : formula_d));
    out.push_back(check("ordered set partitions equal n! times the interval coefficient",
                        fubini_ok, fubini_ok ? "n <= 15" : fubini_d));
    return out;
}

std::vector<CheckResult> verify_matrices(int max_n) {
    std::vector<CheckResult> out;
    bool all_ok = true, simple_ok = true, mono_ok = true;
    std::string all_d, simple_d, mono_d;
    for (int n = 1; n <= max_n; ++n) {
        const BigInt f_all = count_matrices(n, MatrixFlags::from_bits("0111"));
        const BigInt f_simple = count_matrices(n, MatrixFlags::from_bits("0011"));
        if (f_all != count_exact(n, false)) {
            all_ok = false;
            if (all_d.empty()) all_d = show(n, f_all.str(), count_exact(n, false).str());
        }
        if (f_simple != count_exact(n, true)) {
            simple_ok = false;
            if (simple_d.empty()) simple_d = show(n, f_simple.str(), count_exact(n, true).str());
        }
    }
    // Turning any flag on can only widen the census.
    const char* chains[][2] = {{"0101", "0111"}, {"0011", "0111"}, {"0111", "1111"},
                               {"0011", "1011"}, {"0101", "1101"}, {"1011", "1111"}};
    for (int n = 1; n <= std::min(max_n, 5); ++n)
        for (const auto& chain : chains) {
            const BigInt lo = count_matrices(n, MatrixFlags::from_bits(chain[0]));
            const BigInt hi = count_matrices(n, MatrixFlags::from_bits(chain[1]));
            if (lo > hi) {
                mono_ok = false;
                if (mono_d.empty())
                    mono_d = show(n, std::string(chain[0]) + "=" + lo.str(),
                                  std::string(chain[1]) + "=" + hi.str());
            }
        }
    const std::string range = "n <= " + std::to_string(max_n);
    out.push_back(check("matrix census with repeats equals the multiset count", all_ok,
                        all_ok ? range : all_d));
    out.push_back(check("matrix census without repeats equals the simple count", simple_ok,
                        simple_ok ? range : simple_d));
    out.push_back(check("flag monotonicity of the matrix census", mono_ok,
                        mono_ok ? "n <= " + std::to_string(std::min(max_n, 5)) : mono_d));
    return out;
}

std::vector<CheckResult> verify_asymptotics() {
    std::vector<CheckResult> out;
    {
        const bool exact_one = alpha(1).value == 1.0;
        out.push_back(check("alpha(1) is exactly 1", exact_one, "alpha(1)"));
        const double a2 = alpha(2).value;
        const double target = (1.0 + std::sqrt(3.0)) / 2.0;
        out.push_back(check("1/alpha(2) matches its closed form",
                            std::abs(1.0 / a2 - target) < 1e-12,
                            "(1+sqrt 3)/2"));
        out.push_back(check("alpha(10) is within 1e-8 of log 2",
                            std::abs(alpha(10).value - std::numbers::ln2) < 1e-8,
                            "alpha(10) vs log 2"));
        bool decreasing = true;
        double prev = alpha(1).value;
        for (int k = 2; k <= 15; ++k) {
            const double cur = alpha(k).value;
            if (cur >= prev || cur < std::numbers::ln2 - 1e-12) decreasing = false;
            prev = cur;
        }
        out.push_back(check("alpha decreases strictly toward log 2", decreasing, "k <= 15"));
    }
    {
        bool ok = true;
        for (long long n : {1LL, 10LL, 1000LL, 1000000LL}) {
            if (std::abs(lambda_root(n).residual) > 1e-10 * static_cast<double>(n)) ok = false;
            if (std::abs(xi_root(n).residual) > 1e-10 * static_cast<double>(n)) ok = false;
        }
        out.push_back(check("root residuals within 1e-10 * n up to n = 10^6", ok, "lambda, xi"));
    }
    {
        const double r50 = bell_estimate(50).ratio;
        const double r500 = bell_estimate(500).ratio;
        out.push_back(check("bell estimate tightens from n=50 to n=500",
                            std::abs(r500 - 1.0) < std::abs(r50 - 1.0),
                            "ratios " + std::to_string(r50) + " -> " + std::to_string(r500)));
    }
    {
        bool ok = true;
        for (int n : {20, 50, 100, 200}) {
            const BellRatioReport rep = bell_ratio(n, 1);
            if (std::abs(rep.ratio_refined - 1.0) >= std::abs(rep.ratio_coarse - 1.0)) ok = false;
        }
        out.push_back(check("xi-based consecutive-bell ratio beats the log n / n form", ok,
                            "n in {20, 50, 100, 200}"));
    }
    {
        const double r = fubini_estimate(30).ratio;
        out.push_back(check("ordered-partition estimate within 1e-9 at n=30",
                            std::abs(r - 1.0) < 1e-9, "ratio " + std::to_string(r)));
    }
    {
        bool ok = true;
        for (int k = 1; k <= 4; ++k) {
            const double r = interval_coeff_estimate(k, 30).ratio;
            if (std::abs(r - 1.0) > 1e-6) ok = false;
        }
        out.push_back(check("interval coefficient matches its residue form at n=30", ok,
                            "k in 1..4"));
    }
    {
        const CountTable t = simple_share(10);
        const BigRat last = std::get<BigRat>(t.rows.back().second);
        out.push_back(check("simple share at n=10 equals 1633107/2159916",
                            last == BigRat(1633107, 2159916), last.str()));
    }
    return out;
}

std::vector<CheckResult> verify_all() {
    std::vector<CheckResult> out;
    auto add = [&out](std::vector<CheckResult> v) {
        for (auto& c : v) out.push_back(std::move(c));
    };
    add(verify_tables(8));
    add(verify_roundtrip(6));
    add(verify_classes(6));
    add(verify_injection(7));
    add(verify_sparse(8));
    add(verify_sandwich_suite(8));
    add(verify_words(4, 3, 7));
    add(verify_matrices(5));
    add(verify_asymptotics());
    return out;
}

}  // namespace setsys
