#include "cli.hpp"

#include "setsys/asymptotics.hpp"
#include "setsys/bignum.hpp"
#include "setsys/count.hpp"
#include "setsys/enumerate.hpp"
#include "setsys/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#ifdef _WIN32
#include <io.h>
#define SETSYS_ISATTY _isatty(_fileno(stdout))
#else
#include <unistd.h>
#define SETSYS_ISATTY isatty(fileno(stdout))
#endif

namespace setsys::cli {

namespace {

enum class Format { csv, json, md };

struct Table {
    std::string title;
    std::vector<std::string> cols;
    std::vector<std::vector<std::string>> rows;
};

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Format resolve_format(const std::string& name, const std::ostream& out) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "md") return Format::md;
    if (name == "auto") {
        // Markdown when a human is looking, CSV when piped.
        if (&out == &std::cout && SETSYS_ISATTY) return Format::md;
        return Format::csv;
    }
    throw CLI::ValidationError("--format", "expected csv, json, md, or auto");
}

void render(const Table& t, Format f, std::ostream& out) {
    switch (f) {
        case Format::csv: {
            for (std::size_t c = 0; c < t.cols.size(); ++c)
                out << (c ? "," : "") << t.cols[c];
            out << "\n";
            for (const auto& row : t.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
                out << "\n";
            }
            break;
        }
        case Format::json: {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : t.rows) {
                nlohmann::json obj;
                for (std::size_t c = 0; c < row.size(); ++c) obj[t.cols[c]] = row[c];
                rows.push_back(std::move(obj));
            }
            nlohmann::json doc{{"title", t.title}, {"rows", rows}};
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::md: {
            std::vector<std::size_t> width(t.cols.size());
            for (std::size_t c = 0; c < t.cols.size(); ++c) width[c] = t.cols[c].size();
            for (const auto& row : t.rows)
                for (std::size_t c = 0; c < row.size(); ++c)
                    width[c] = std::max(width[c], row[c].size());
            if (!t.title.empty()) out << "### " << t.title << "\n\n";
            auto line = [&](const std::vector<std::string>& cells) {
                out << "|";
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    out << " " << cells[c];
                    out << std::string(width[c] - cells[c].size(), ' ') << " |";
                }
                out << "\n";
            };
            line(t.cols);
            out << "|";
            for (std::size_t c = 0; c < t.cols.size(); ++c)
                out << std::string(width[c] + 2, '-') << "|";
            out << "\n";
            for (const auto& row : t.rows) line(row);
            break;
        }
    }
}

// Everything the `count` subcommand needs to produce one table.
struct CountArgs {
    std::string family;
    int from = 1;
    int to = 1;
    std::string method = "auto";
    std::optional<int> k;
    std::optional<int> m;
    std::optional<int> r;
    std::string flags;
    int jobs = 1;
};

std::string param_string(const std::vector<std::pair<std::string, std::string>>& params) {
    std::string s;
    for (const auto& [key, val] : params) {
        if (!s.empty()) s += ";";
        s += key + "=" + val;
    }
    return s;
}

CountTable build_count_table(const CountArgs& a) {
    if (a.from < 0 || a.to < a.from)
        throw CLI::ValidationError("count", "need 0 <= --from <= --to");
    CountTable t;
    t.family = a.family;
    const bool exact_family = a.family == "h-prime" || a.family == "h-double-prime";
    const bool brute_family = a.family == "h-prime-k" || a.family == "h-double-prime-k";
    if (a.method != "auto" && !exact_family && !brute_family)
        throw CLI::ValidationError("--method", "does not apply to family " + a.family);

    if (exact_family || brute_family) {
        const bool simple = a.family == "h-prime" || a.family == "h-prime-k";
        std::string method = a.method;
        if (brute_family) {
            if (method == "exact")
                throw CLI::ValidationError(
                    "--method", "degree-bounded families are generated, not counted in closed form");
            method = "brute";
            if (!a.k) throw CLI::ValidationError("--k", "family " + a.family + " needs --k");
            t.params.emplace_back("k", std::to_string(*a.k));
        } else if (method == "auto") {
            method = "exact";
        }
        for (int n = std::max(a.from, 1); n <= a.to; ++n) {
            if (method == "exact")
                t.append(n, count_exact(n, simple));
            else
                t.append(n, count_set_systems({n, simple, brute_family ? a.k : std::nullopt},
                                              a.jobs));
        }
    } else if (a.family == "bell") {
        const auto row = bell_row(a.to);
        for (int n = a.from; n <= a.to; ++n) t.append(n, row[static_cast<std::size_t>(n)]);
    } else if (a.family == "bell-sparse") {
        if (!a.m) throw CLI::ValidationError("--m", "family bell-sparse needs --m");
        t.params.emplace_back("m", std::to_string(*a.m));
        for (int n = std::max(a.from, 1); n <= a.to; ++n) t.append(n, bell_sparse(n, *a.m));
    } else if (a.family == "fubini") {
        for (int n = a.from; n <= a.to; ++n) t.append(n, fubini(n));
    } else if (a.family == "interval-coeff") {
        if (a.k) t.params.emplace_back("k", std::to_string(*a.k));
        const auto row = interval_coeff_row(a.to, a.k);
        for (int n = a.from; n <= a.to; ++n) t.append(n, row[static_cast<std::size_t>(n)]);
    } else if (a.family == "sparse-words") {
        if (!a.r || !a.k)
            throw CLI::ValidationError("sparse-words", "needs --r (alphabet) and --k (window)");
        t.params.emplace_back("r", std::to_string(*a.r));
        t.params.emplace_back("k", std::to_string(*a.k));
        for (int n = a.from; n <= a.to; ++n) t.append(n, sparse_words(*a.r, *a.k, n));
    } else if (a.family == "matrices-F") {
        if (a.flags.empty()) throw CLI::ValidationError("--flags", "family matrices-F needs --flags");
        const MatrixFlags f = MatrixFlags::from_bits(a.flags);
        t.params.emplace_back("flags", f.bits());
        for (int n = std::max(a.from, 1); n <= a.to; ++n) t.append(n, count_matrices(n, f));
    } else {
        throw CLI::ValidationError("--family", "unknown family " + a.family);
    }
    return t;
}

Table to_table(const CountTable& ct) {
    Table t;
    t.title = ct.family;
    t.cols = {"family", "param", "n", "value"};
    const std::string param = param_string(ct.params);
    for (const auto& [n, value] : ct.rows)
        t.rows.push_back({ct.family, param, std::to_string(n), to_string(value)});
    return t;
}

// Sized defaults for each named suite; --max-weight overrides, clamped where
// the implementation has a hard feasibility cap.
std::vector<CheckResult> run_suite(const std::string& suite, std::optional<int> w) {
    auto pick = [&](int dflt, int cap = 0) {
        int v = w ? *w : dflt;
        if (cap > 0) v = std::min(v, cap);
        return v;
    };
    if (suite == "tables") return verify_tables(pick(8));
    if (suite == "roundtrip") return verify_roundtrip(pick(6));
    if (suite == "classes") return verify_classes(pick(6, 9));
    if (suite == "injection") return verify_injection(pick(7));
    if (suite == "sparse") return verify_sparse(pick(8));
    if (suite == "sandwich") return verify_sandwich_suite(pick(8));
    if (suite == "words") return verify_words(4, 3, pick(7));
    if (suite == "matrices") return verify_matrices(pick(5, 6));
    if (suite == "asymptotics") return verify_asymptotics();
    if (suite == "all") {
        if (!w) return verify_all();
        std::vector<CheckResult> out;
        for (const char* s : {"tables", "roundtrip", "classes", "injection", "sparse",
                              "sandwich", "words", "matrices", "asymptotics"}) {
            auto part = run_suite(s, w);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw CLI::ValidationError("--suite", "unknown suite " + suite);
}

// Lets the enumerate visitor unwind once --limit systems have been written.
struct StreamLimit {};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts, streams and checks for weighted systems of finite sets"};
    app.require_subcommand(1);

    std::string format = "auto";
    std::string output_path;
    app.add_option("--format", format, "Output format: csv, json, md, or auto")
        ->capture_default_str();
    app.add_option("--output", output_path, "Write the result to this file instead of stdout");

    // count
    auto* count_cmd = app.add_subcommand("count", "Tabulate an exact counting family");
    CountArgs ca;
    count_cmd->add_option("--family", ca.family, "Counting family")->required();
    count_cmd->add_option("--from", ca.from, "First n");
    count_cmd->add_option("--to", ca.to, "Last n")->required();
    count_cmd->add_option("--method", ca.method, "exact or brute (h-prime/h-double-prime only)");
    count_cmd->add_option("--k", ca.k, "Degree bound / window / part-size bound");
    count_cmd->add_option("--m", ca.m, "Sparseness for bell-sparse");
    count_cmd->add_option("--r", ca.r, "Alphabet size for sparse-words");
    count_cmd->add_option("--flags", ca.flags, "Four binary digits for matrices-F");
    count_cmd->add_option("--jobs", ca.jobs, "Worker threads for brute-force counting")
        ->check(CLI::PositiveNumber);

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "Stream systems as JSON lines");
    int en_weight = 0;
    bool en_simple = false;
    std::optional<int> en_maxdeg;
    std::optional<long long> en_limit;
    bool en_progress = false;
    enum_cmd->add_option("--weight", en_weight, "Total weight")->required();
    enum_cmd->add_flag("--simple", en_simple, "Only systems without repeated edges");
    enum_cmd->add_option("--max-degree", en_maxdeg, "Largest allowed vertex degree");
    enum_cmd->add_option("--limit", en_limit, "Stop after this many systems");
    enum_cmd->add_flag("--progress", en_progress, "Report the emitted count on stderr");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run a consistency suite");
    std::string suite = "all";
    std::optional<int> max_weight;
    verify_cmd->add_option("--suite", suite,
                           "tables, roundtrip, classes, injection, sparse, sandwich, words, "
                           "matrices, asymptotics, or all");
    verify_cmd->add_option("--max-weight", max_weight, "Override the suite size");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Exact sandwich bounds for bounded degree");
    std::optional<int> bd_n, bd_k;
    int bd_max_n = 8;
    bounds_cmd->add_option("--n", bd_n, "Single weight");
    bounds_cmd->add_option("--k", bd_k, "Degree bound (omit for the unbounded row)");
    bounds_cmd->add_option("--max-n", bd_max_n, "Table up to this weight");

    // asymptotics
    auto* asym_cmd = app.add_subcommand("asymptotics", "Root solvers and smooth estimates");
    std::string op;
    std::optional<long long> as_n;
    std::optional<int> as_k, as_m;
    std::optional<long long> as_from, as_to;
    asym_cmd->add_option("--op", op,
                         "alpha, lambda, xi, bell-estimate, bell-ratio, fubini, "
                         "interval-coeff, or constants")
        ->required();
    asym_cmd->add_option("--n", as_n, "Argument n");
    asym_cmd->add_option("--k", as_k, "Argument k");
    asym_cmd->add_option("--m", as_m, "Step for bell-ratio");
    asym_cmd->add_option("--from", as_from, "Range start");
    asym_cmd->add_option("--to", as_to, "Range end");

    // experiment
    auto* exp_cmd = app.add_subcommand("experiment", "Share of simple systems by weight");
    int exp_max_n = 10;
    exp_cmd->add_option("--max-n", exp_max_n, "Last weight")->check(CLI::PositiveNumber);

    for (CLI::App* sub : {count_cmd, enum_cmd, verify_cmd, bounds_cmd, asym_cmd, exp_cmd})
        sub->fallthrough();  // global --format/--output may follow the subcommand

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            err << "cannot open " << output_path << " for writing\n";
            return 2;
        }
        sink = &file;
    }
    if (format != "auto" && format != "csv" && format != "json" && format != "md") {
        err << "--format: expected csv, json, md, or auto\n";
        return 2;
    }
    const Format fmt = resolve_format(format, *sink);

    try {
        if (*count_cmd) {
            render(to_table(build_count_table(ca)), fmt, *sink);
            return 0;
        }
        if (*enum_cmd) {
            long long emitted = 0;
            try {
                gen_set_systems({en_weight, en_simple, en_maxdeg}, [&](const SetSystem& h) {
                    *sink << h.to_json() << "\n";
                    ++emitted;
                    if (en_limit && emitted >= *en_limit) throw StreamLimit{};
                });
            } catch (const StreamLimit&) {
            }
            if (en_progress) err << "systems: " << emitted << "\n";
            return 0;
        }
        if (*verify_cmd) {
            const auto results = run_suite(suite, max_weight);
            int fails = 0;
            for (const auto& c : results) {
                *sink << (c.pass ? "[ok]   " : "[FAIL] ") << c.name << " — " << c.detail << "\n";
                if (!c.pass) ++fails;
            }
            *sink << results.size() << " checks, " << fails << " failures\n";
            return fails ? 1 : 0;
        }
        if (*bounds_cmd) {
            Table t;
            t.title = "exact sandwich bounds";
            t.cols = {"n", "k", "lower", "middle", "upper", "holds"};
            bool all_hold = true;
            auto add_row = [&](int n, std::optional<int> k) {
                const SandwichReport rep = verify_sandwich(n, k);
                all_hold = all_hold && rep.holds;
                t.rows.push_back({std::to_string(rep.n), rep.k ? std::to_string(*rep.k) : "-",
                                  rep.lower.str(), rep.middle.str(), rep.upper.str(),
                                  rep.holds ? "yes" : "no"});
            };
            if (bd_n) {
                add_row(*bd_n, bd_k);
            } else {
                for (int n = 1; n <= bd_max_n; ++n) {
                    if (bd_k) {
                        add_row(n, bd_k);
                    } else {
                        for (int k = 1; k <= 4; ++k) add_row(n, k);
                        add_row(n, std::nullopt);
                    }
                }
            }
            render(t, fmt, *sink);
            return all_hold ? 0 : 1;
        }
        if (*asym_cmd) {
            Table t;
            auto range = [&](long long dflt_lo, long long dflt_hi) {
                long long lo = as_from ? *as_from : (as_n ? *as_n : dflt_lo);
                long long hi = as_to ? *as_to : (as_n ? *as_n : dflt_hi);
                if (lo > hi) throw CLI::ValidationError("--from/--to", "empty range");
                return std::make_pair(lo, hi);
            };
            if (op == "alpha") {
                const auto [lo, hi] = as_k ? std::make_pair<long long, long long>(*as_k, *as_k)
                                           : range(1, 10);
                t.title = "alpha roots";
                t.cols = {"k", "value", "residual", "iterations"};
                for (long long k = lo; k <= hi; ++k) {
                    const RootResult r = alpha(static_cast<int>(k));
                    t.rows.push_back({std::to_string(k), fmt_double(r.value),
                                      fmt_double(r.residual), std::to_string(r.iterations)});
                }
            } else if (op == "lambda" || op == "xi") {
                const auto [lo, hi] = range(1, 10);
                t.title = op + " roots";
                t.cols = {"n", "value", "residual", "iterations"};
                for (long long n = lo; n <= hi; ++n) {
                    const RootResult r = op == "lambda" ? lambda_root(n) : xi_root(n);
                    t.rows.push_back({std::to_string(n), fmt_double(r.value),
                                      fmt_double(r.residual), std::to_string(r.iterations)});
                }
            } else if (op == "bell-estimate") {
                const auto [lo, hi] = range(1, 20);
                t.title = "set-partition count vs smooth form";
                t.cols = {"n", "exact", "log-estimate", "ratio"};
                for (long long n = lo; n <= hi; ++n) {
                    const AsymptoticReport rep = bell_estimate(static_cast<int>(n));
                    t.rows.push_back({std::to_string(n), rep.exact.str(),
                                      fmt_double(rep.log_estimate), fmt_double(rep.ratio)});
                }
            } else if (op == "bell-ratio") {
                if (!as_n) throw CLI::ValidationError("--n", "bell-ratio needs --n");
                const BellRatioReport rep =
                    bell_ratio(static_cast<int>(*as_n), as_m ? *as_m : 1);
                t.title = "consecutive set-partition ratio";
                t.cols = {"n", "m", "exact", "coarse", "refined", "ratio-coarse", "ratio-refined"};
                t.rows.push_back({std::to_string(rep.n), std::to_string(rep.m), rep.exact.str(),
                                  fmt_double(rep.coarse), fmt_double(rep.refined),
                                  fmt_double(rep.ratio_coarse), fmt_double(rep.ratio_refined)});
            } else if (op == "fubini") {
                const auto [lo, hi] = range(1, 20);
                t.title = "ordered set partitions vs smooth form";
                t.cols = {"n", "exact", "log-estimate", "ratio"};
                for (long long n = lo; n <= hi; ++n) {
                    const AsymptoticReport rep = fubini_estimate(static_cast<int>(n));
                    t.rows.push_back({std::to_string(n), rep.exact.str(),
                                      fmt_double(rep.log_estimate), fmt_double(rep.ratio)});
                }
            } else if (op == "interval-coeff") {
                if (!as_k) throw CLI::ValidationError("--k", "interval-coeff needs --k");
                const auto [lo, hi] = range(1, 20);
                t.title = "interval coefficient vs residue form";
                t.cols = {"n", "exact", "estimate", "ratio"};
                for (long long n = lo; n <= hi; ++n) {
                    const AsymptoticReport rep =
                        interval_coeff_estimate(*as_k, static_cast<int>(n));
                    t.rows.push_back({std::to_string(n), rep.exact.str(),
                                      fmt_double(rep.estimate), fmt_double(rep.ratio)});
                }
            } else if (op == "constants") {
                t.title = "reference constants";
                t.cols = {"name", "value"};
                for (const auto& [name, value] : reference_constants())
                    t.rows.push_back({name, fmt_double(value)});
            } else {
                throw CLI::ValidationError("--op", "unknown op " + op);
            }
            render(t, fmt, *sink);
            return 0;
        }
        if (*exp_cmd) {
            Table t;
            t.title = "share of simple systems";
            t.cols = {"n", "simple", "all", "share", "share-decimal"};
            simple_share(exp_max_n);  // enforces the proven bracket
            for (int n = 1; n <= exp_max_n; ++n) {
                const BigInt simple = count_exact(n, true);
                const BigInt all = count_exact(n, false);
                const BigRat share(simple, all);
                t.rows.push_back({std::to_string(n), simple.str(), all.str(), share.str(),
                                  fmt_double(to_double(share))});
            }
            render(t, fmt, *sink);
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid request: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace setsys::cli
