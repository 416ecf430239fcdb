#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "primemat/diff_matrix.hpp"
#include "primemat/errors.hpp"
#include "primemat/harness.hpp"
#include "primemat/primality.hpp"
#include "primemat/shifted_sets.hpp"
#include "primemat/sum_matrix.hpp"

namespace primemat::cli {
namespace {

// Keeps 2n + 1 and friends far away from overflow.
constexpr std::uint64_t kMaxArgument = std::uint64_t{1} << 60;

std::optional<std::uint64_t> parse_digits(const std::string& text) {
    if (text.empty() || text.size() > 19) return std::nullopt;
    std::uint64_t v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && v > kMaxArgument / base) return std::nullopt;
        v *= base;
    }
    return v;
}

// Accepts "1000000", "1e6" and "10^6".
std::string normalize_count(std::string& text) {
    std::optional<std::uint64_t> value;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
        auto mant = parse_digits(text.substr(0, e));
        auto exp = parse_digits(text.substr(e + 1));
        if (mant && exp) {
            if (auto p = checked_pow(10, *exp); p && (*p == 0 || *mant <= kMaxArgument / *p)) value = *mant * *p;
        }
    } else if (auto c = text.find('^'); c != std::string::npos) {
        auto base = parse_digits(text.substr(0, c));
        auto exp = parse_digits(text.substr(c + 1));
        if (base && exp) value = checked_pow(*base, *exp);
    } else {
        value = parse_digits(text);
    }
    if (!value || *value > kMaxArgument) return "expected a non-negative integer (e.g. 1000000, 1e6, 10^6), got '" + text + "'";
    text = std::to_string(*value);
    return {};
}

CLI::Validator count_validator() { return CLI::Validator(normalize_count, "", "COUNT"); }

CLI::Option* add_count(CLI::App* app, const std::string& name, std::uint64_t& target, const std::string& help) {
    return app->add_option(name, target, help)->transform(count_validator())->type_name("N");
}

struct Context {
    std::string table_path;
    std::string out_path;
    std::ostringstream body;
    std::ostream* err = nullptr;
};

PrimalityTable acquire_table(const Context& ctx, std::uint64_t needed) {
    needed = std::max<std::uint64_t>(needed, 2);
    if (!ctx.table_path.empty()) {
        auto table = load_table(ctx.table_path);
        if (table.limit() < needed)
            throw RangeError("cached table limit " + std::to_string(table.limit()) + " is below the required " +
                             std::to_string(needed));
        return table;
    }
    return build_table(needed);
}

void require(bool condition, const std::string& message) {
    if (!condition) throw UsageError(message);
}

void require_order(std::uint64_t n) {
    require(n >= 1, "--n must be at least 1");
    require(n <= kMaxArgument / 4, "--n is too large");
}

// -- sieve -------------------------------------------------------------------

struct SieveArgs {
    std::uint64_t limit = 0;
    std::string out;
};

int do_sieve_build(Context& ctx, const SieveArgs& a) {
    require(a.limit >= 2, "--limit must be at least 2");
    const auto table = build_table(a.limit);
    if (!a.out.empty()) save_table(table, a.out);
    ctx.body << "limit,primes\n" << table.limit() << ',' << table.count() << '\n';
    return kExitOk;
}

// -- matrix ------------------------------------------------------------------

struct MatrixArgs {
    std::string family;
    std::uint64_t n = 0;
    bool render = false;
    std::uint64_t cap = kDefaultRenderCap;
};

int do_matrix(Context& ctx, const MatrixArgs& a) {
    require_order(a.n);
    const bool sum = a.family == "sum";
    if (a.render) require(a.n <= a.cap, "--render supports orders up to " + std::to_string(a.cap));
    const auto table = acquire_table(ctx, 2 * a.n + 1);
    const auto chi = odd_indicator(table, a.n);
    if (a.render) {
        if (sum) {
            ctx.body << format_grid(render(SumMatrixView(chi), a.cap));
        } else {
            ctx.body << format_grid(render(DiffMatrixView(chi), a.cap));
            if (a.n >= 15)
                ctx.body << "# note: (3,15) = (15,3) = 2*|15-3| = 31-7 = 24; a widely reproduced printing of this "
                            "table shows 26 at (15,3)\n";
        }
        return kExitOk;
    }
    const std::uint64_t p = chi.prime_count();
    const std::uint64_t nonzero = sum ? p * p : (p == 0 ? 0 : p * (p - 1));
    std::uint64_t max_entry = 0;
    if (p > 0) {
        const auto& idx = chi.prime_indices();
        max_entry = sum ? 2 * (2 * idx.back() + 1) : 2 * (idx.back() - idx.front());
    }
    ctx.body << "family,order,prime_indices,nonzero_entries,max_entry\n"
             << a.family << ',' << a.n << ',' << p << ',' << nonzero << ',' << max_entry << '\n';
    return kExitOk;
}

// -- charseq -----------------------------------------------------------------

struct CharseqArgs {
    std::string family;
    std::uint64_t n = 0;
    std::string format = "csv";
    std::string method = "fast";
};

int do_charseq(Context& ctx, const CharseqArgs& a) {
    require_order(a.n);
    require(a.method != "scan" || a.n <= 100000, "--method scan is limited to n <= 100000");
    const auto table = acquire_table(ctx, 2 * a.n + 1);
    const bool sum = a.family == "sum";

    std::vector<std::uint64_t> values;
    nlohmann::ordered_json stats = nlohmann::ordered_json::object();
    if (sum) {
        CharSequence seq;
        if (a.method == "scan") {
            seq = char_sequence_scan(SumMatrixView(table, a.n));
        } else if (a.method == "incremental") {
            for (std::uint64_t i = 0; i < a.n; ++i) extend_char_sequence(seq, table);
        } else {
            seq = char_sequence_fast(odd_indicator(table, a.n));
        }
        const auto z = zero_stats(seq);
        stats["m0"] = z.m0;
        stats["k0"] = z.k0 ? nlohmann::ordered_json(*z.k0) : nlohmann::ordered_json(nullptr);
        values = std::move(seq.values);
    } else {
        MasterSequence seq;
        if (a.method == "scan") {
            seq = master_sequence_scan(DiffMatrixView(table, a.n));
        } else if (a.method == "incremental") {
            for (std::uint64_t i = 0; i < a.n; ++i) extend_master_sequence(seq, table);
        } else {
            seq = master_sequence_fast(odd_indicator(table, a.n));
        }
        if (a.n >= 2) {
            const auto s = almost_stats(seq);
            stats["alpha"] = s.alpha;
            stats["t"] = s.t ? nlohmann::ordered_json(*s.t) : nlohmann::ordered_json(nullptr);
        }
        values = std::move(seq.values);
    }

    if (a.format == "json") {
        nlohmann::ordered_json j;
        j["family"] = a.family;
        j["n"] = a.n;
        j["values"] = values;
        j["stats"] = std::move(stats);
        ctx.body << j.dump() << '\n';
        return kExitOk;
    }
    ctx.body << (sum ? "k,even,L\n" : "k,gap,f\n");
    for (std::uint64_t k = 1; k <= values.size(); ++k)
        ctx.body << k << ',' << (sum ? CharSequence::even_for(k) : MasterSequence::gap_for(k)) << ',' << values[k - 1]
                 << '\n';
    return kExitOk;
}

// -- stats -------------------------------------------------------------------

struct StatsArgs {
    std::string family;
    std::uint64_t n_max = 0;
    std::uint64_t step = 1;
};

int do_stats(Context& ctx, const StatsArgs& a) {
    require_order(a.n_max);
    require(a.step >= 1, "--step must be at least 1");
    const auto table = acquire_table(ctx, 2 * a.n_max + 1);
    ctx.body << to_csv(mu_nu_series(table, *parse_family(a.family), a.n_max, a.step));
    return kExitOk;
}

// -- goldbach ----------------------------------------------------------------

struct GoldbachArgs {
    std::uint64_t max_even = 0;
    std::uint64_t even = 0;
    unsigned threads = 0;
    bool no_timing = false;
};

int do_goldbach_verify(Context& ctx, const GoldbachArgs& a) {
    require(a.max_even >= 6 && a.max_even % 2 == 0, "--max must be an even number >= 6");
    const auto table = acquire_table(ctx, a.max_even);
    const auto report = verify_goldbach(table, a.max_even, {a.threads, 8});
    ctx.body << to_json(report, !a.no_timing) << '\n';
    return report.ok() ? kExitOk : kExitClaimFailed;
}

int do_goldbach_witness(Context& ctx, const GoldbachArgs& a) {
    require(a.even >= 6 && a.even % 2 == 0, "--even must be an even number >= 6");
    const auto table = acquire_table(ctx, a.even);
    const auto w = goldbach_witness(table, a.even);
    ctx.body << "even,p,q\n";
    if (!w) {
        *ctx.err << "no odd-prime split found for " << a.even << '\n';
        return kExitClaimFailed;
    }
    ctx.body << a.even << ',' << w->first << ',' << w->second << '\n';
    return kExitOk;
}

// -- polignac ----------------------------------------------------------------

struct PolignacArgs {
    std::uint64_t gap = 0;
    std::uint64_t limit = 0;
};

int do_polignac(Context& ctx, const PolignacArgs& a, bool list) {
    require(a.gap >= 2 && a.gap % 2 == 0, "--gap must be a positive even number");
    require(a.limit >= 2, "--limit must be at least 2");
    const auto table = acquire_table(ctx, a.limit);
    const auto census = polignac_census(table, a.gap, a.limit, list);
    if (list) {
        ctx.body << "p,p_plus_gap\n";
        for (const auto& [p, q] : census.pairs) ctx.body << p << ',' << q << '\n';
    } else {
        ctx.body << "gap,limit,count\n" << census.gap << ',' << census.limit << ',' << census.count << '\n';
    }
    return kExitOk;
}

// -- sets --------------------------------------------------------------------

struct SetsArgs {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t limit = 0;
    std::optional<std::uint64_t> above;
    bool no_timing = false;
};

void require_offset(std::uint64_t v, const char* flag) {
    require(v >= 1 && v % 2 == 1, std::string(flag) + " must be an odd natural number");
}

int do_sets_list(Context& ctx, const SetsArgs& s) {
    require_offset(s.a, "--a");
    const auto table = acquire_table(ctx, 2 * s.limit + s.a);
    const auto set = members(table, s.a, s.limit);
    ctx.body << "k,two_k_plus_a\n";
    for (std::uint64_t k : set.members) ctx.body << k << ',' << 2 * k + s.a << '\n';
    return kExitOk;
}

int do_sets_intersect(Context& ctx, const SetsArgs& s) {
    require_offset(s.a, "--a");
    require_offset(s.b, "--b");
    const auto table = acquire_table(ctx, 2 * s.limit + std::max(s.a, s.b));
    ctx.body << "k,two_k_plus_a,two_k_plus_b\n";
    auto row = [&](std::uint64_t k) { ctx.body << k << ',' << 2 * k + s.a << ',' << 2 * k + s.b << '\n'; };
    if (s.above) {
        const auto k = first_witness_above(table, s.a, s.b, *s.above, s.limit);
        if (!k) {
            *ctx.err << "no witness above " << *s.above << " up to " << s.limit << '\n';
            return kExitClaimFailed;
        }
        row(*k);
        return kExitOk;
    }
    for (std::uint64_t k : intersect(table, s.a, s.b, s.limit)) row(k);
    return kExitOk;
}

int do_sets_lemma(Context& ctx, const SetsArgs& s) {
    require_offset(s.a, "--a");
    const auto table = acquire_table(ctx, 2 * s.limit + s.a);
    const auto report = check_shift_lemma(table, s.a, s.limit);
    ctx.body << to_json(report, !s.no_timing) << '\n';
    return report.ok() ? kExitOk : kExitClaimFailed;
}

// -- verify ------------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    std::uint64_t limit = 0;
    unsigned threads = 0;
    std::size_t witness_cap = 8;
    bool no_timing = false;
};

int do_verify(Context& ctx, const VerifyArgs& v) {
    const auto bounds = suite_bounds(v.limit);
    const auto table = acquire_table(ctx, v.limit);
    const SuiteOptions opts{v.threads, v.witness_cap};
    std::vector<ClaimReport> reports;
    if (v.suite == "all") {
        reports = verify_all(table, v.limit, opts);
    } else if (v.suite == "goldbach") {
        reports.push_back(verify_goldbach(table, bounds.max_even, opts));
    } else if (v.suite == "diffpairs") {
        reports.push_back(verify_diff_pairs(table, bounds.m_max, opts));
    } else if (v.suite == "prop2") {
        reports.push_back(verify_twin_between(table, bounds.p_max, opts));
    } else {
        reports.push_back(recurrence_consistency(table, Family::sum, bounds.recurrence_n_max, opts));
        reports.push_back(recurrence_consistency(table, Family::diff, bounds.recurrence_n_max, opts));
    }
    bool all_ok = true;
    for (const auto& r : reports) {
        ctx.body << to_json(r, !v.no_timing) << '\n';
        all_ok = all_ok && r.ok();
    }
    return all_ok ? kExitOk : kExitClaimFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"primemat: prime-indexed sum/difference matrices and bounded conjecture checks", "primemat"};
    app.require_subcommand(1);
    app.allow_extras(false);

    Context ctx;
    ctx.err = &err;
    app.add_option("--table", ctx.table_path, "Load a cached primality table instead of sieving")
        ->check(CLI::ExistingFile);

    std::function<int()> action;

    // sieve
    SieveArgs sieve_args;
    auto* sieve = app.add_subcommand("sieve", "Build and persist primality tables");
    sieve->require_subcommand(1);
    auto* sieve_build = sieve->add_subcommand("build", "Sieve up to --limit");
    add_count(sieve_build, "--limit", sieve_args.limit, "Inclusive upper bound")->required();
    sieve_build->add_option("--out", sieve_args.out, "Write the table cache file here");
    sieve_build->callback([&] { action = [&] { return do_sieve_build(ctx, sieve_args); }; });

    // matrix
    MatrixArgs matrix_args;
    auto* matrix = app.add_subcommand("matrix", "Describe or render a matrix of one family");
    matrix->add_option("family", matrix_args.family, "sum | diff")->required()->check(CLI::IsMember({"sum", "diff"}));
    add_count(matrix, "--n", matrix_args.n, "Matrix order")->required();
    matrix->add_flag("--render", matrix_args.render, "Print the full grid");
    add_count(matrix, "--cap", matrix_args.cap, "Largest order accepted by --render");
    matrix->add_option("--out", ctx.out_path, "Write output to a file");
    matrix->callback([&] { action = [&] { return do_matrix(ctx, matrix_args); }; });

    // charseq
    CharseqArgs charseq_args;
    auto* charseq = app.add_subcommand("charseq", "Characteristic sequence of a matrix");
    charseq->add_option("--family", charseq_args.family, "sum | diff")
        ->required()
        ->check(CLI::IsMember({"sum", "diff"}));
    add_count(charseq, "--n", charseq_args.n, "Matrix order")->required();
    charseq->add_option("--format", charseq_args.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    charseq->add_option("--method", charseq_args.method, "fast | scan | incremental")
        ->check(CLI::IsMember({"fast", "scan", "incremental"}));
    charseq->add_option("--out", ctx.out_path, "Write output to a file");
    charseq->callback([&] { action = [&] { return do_charseq(ctx, charseq_args); }; });

    // stats
    StatsArgs stats_args;
    auto* stats = app.add_subcommand("stats", "Corner statistics series for plotting");
    stats->add_option("--family", stats_args.family, "sum | diff")->required()->check(CLI::IsMember({"sum", "diff"}));
    add_count(stats, "--n-max", stats_args.n_max, "Largest order")->required();
    add_count(stats, "--step", stats_args.step, "Row spacing");
    stats->add_option("--out", ctx.out_path, "Write output to a file");
    stats->callback([&] { action = [&] { return do_stats(ctx, stats_args); }; });

    // goldbach
    GoldbachArgs gb_args;
    auto* goldbach = app.add_subcommand("goldbach", "Even numbers as sums of two odd primes");
    goldbach->require_subcommand(1);
    auto* gb_verify = goldbach->add_subcommand("verify", "Check every even in [6, --max]");
    add_count(gb_verify, "--max", gb_args.max_even, "Largest even number")->required();
    gb_verify->add_option("--threads", gb_args.threads, "Worker threads (0 = all cores)");
    gb_verify->add_flag("--no-timing", gb_args.no_timing, "Write elapsed_ms as null");
    gb_verify->add_option("--out", ctx.out_path, "Write output to a file");
    gb_verify->callback([&] { action = [&] { return do_goldbach_verify(ctx, gb_args); }; });
    auto* gb_witness = goldbach->add_subcommand("witness", "Smallest-p split of one even number");
    add_count(gb_witness, "--even", gb_args.even, "Even number >= 6")->required();
    gb_witness->add_option("--out", ctx.out_path, "Write output to a file");
    gb_witness->callback([&] { action = [&] { return do_goldbach_witness(ctx, gb_args); }; });

    // polignac
    PolignacArgs pol_args;
    auto* polignac = app.add_subcommand("polignac", "Prime pairs with a fixed even gap");
    polignac->require_subcommand(1);
    bool pol_list = false;
    for (const char* name : {"count", "list"}) {
        auto* sub = polignac->add_subcommand(name, std::string(name) + " pairs (p, p + gap) with p + gap <= limit");
        add_count(sub, "--gap", pol_args.gap, "Even gap")->required();
        add_count(sub, "--limit", pol_args.limit, "Upper bound on p + gap")->required();
        sub->add_option("--out", ctx.out_path, "Write output to a file");
        const bool is_list = std::string(name) == "list";
        sub->callback([&, is_list] {
            pol_list = is_list;
            action = [&] { return do_polignac(ctx, pol_args, pol_list); };
        });
    }

    // sets
    SetsArgs sets_args;
    auto* sets = app.add_subcommand("sets", "Shifted prime sets S_a = {k : 2k + a prime}");
    sets->require_subcommand(1);
    auto* sets_list = sets->add_subcommand("list", "Members of S_a up to --limit");
    add_count(sets_list, "--a", sets_args.a, "Odd offset")->required();
    add_count(sets_list, "--limit", sets_args.limit, "Largest k")->required();
    sets_list->add_option("--out", ctx.out_path, "Write output to a file");
    sets_list->callback([&] { action = [&] { return do_sets_list(ctx, sets_args); }; });
    auto* sets_inter = sets->add_subcommand("intersect", "Members of S_a and S_b up to --limit");
    add_count(sets_inter, "--a", sets_args.a, "Odd offset")->required();
    add_count(sets_inter, "--b", sets_args.b, "Odd offset")->required();
    add_count(sets_inter, "--limit", sets_args.limit, "Largest k")->required();
    sets_inter->add_option("--above", sets_args.above, "Only the least common member greater than this")
        ->transform(count_validator());
    sets_inter->add_option("--out", ctx.out_path, "Write output to a file");
    sets_inter->callback([&] { action = [&] { return do_sets_intersect(ctx, sets_args); }; });
    auto* sets_lemma = sets->add_subcommand("lemma", "Check the S_{a+2} -> S_a shift relation up to --limit");
    add_count(sets_lemma, "--a", sets_args.a, "Odd offset")->required();
    add_count(sets_lemma, "--limit", sets_args.limit, "Largest k")->required();
    sets_lemma->add_flag("--no-timing", sets_args.no_timing, "Write elapsed_ms as null");
    sets_lemma->add_option("--out", ctx.out_path, "Write output to a file");
    sets_lemma->callback([&] { action = [&] { return do_sets_lemma(ctx, sets_args); }; });

    // verify
    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run bounded verification suites");
    verify->add_option("suite", verify_args.suite, "all | goldbach | diffpairs | prop2 | recurrence")
        ->required()
        ->check(CLI::IsMember({"all", "goldbach", "diffpairs", "prop2", "recurrence"}));
    add_count(verify, "--limit", verify_args.limit, "Sieve limit; suite ranges derive from it")->required();
    verify->add_option("--threads", verify_args.threads, "Worker threads (0 = all cores)");
    verify->add_option("--witness-cap", verify_args.witness_cap, "Witness rows kept per report");
    verify->add_flag("--no-timing", verify_args.no_timing, "Write elapsed_ms as null");
    verify->add_option("--out", ctx.out_path, "Write output to a file");
    verify->callback([&] { action = [&] { return do_verify(ctx, verify_args); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    int code = kExitUsage;
    try {
        if (!action) throw UsageError("no command given");
        code = action();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kExitUsage;
    }

    if (ctx.out_path.empty()) {
        out << ctx.body.str();
    } else {
        std::ofstream file(ctx.out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot write " << ctx.out_path << '\n';
            return kExitUsage;
        }
        file << ctx.body.str();
    }
    return code;
}

}  // namespace primemat::cli
