// nilcount: classify and count cyclic / strictly abelian / strictly
// nilpotent integers, emit the exact coefficients of their asymptotic
// expansions, and run the numeric validation suites.
//
// Exit codes: 0 success, 2 usage or domain error, 3 resource/IO/numeric
// error. All data output is deterministic for fixed flags.

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilcount/arithmetic.hpp"
#include "nilcount/asymptotics.hpp"
#include "nilcount/census.hpp"
#include "nilcount/csv.hpp"
#include "nilcount/numeric.hpp"
#include "nilcount/quadrature.hpp"
#include "nilcount/series.hpp"

using namespace nilcount;

namespace {

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        if (!std::cout) throw std::runtime_error("stdout write failed");
    } else {
        write_file_atomic(out_path, content);
    }
}

std::vector<u64> parse_checkpoint_list(const std::string& text) {
    std::vector<u64> xs;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (!tok.empty()) xs.push_back(parse_u64_scientific(tok));
    }
    return xs;
}

std::vector<u64> default_checkpoints(u64 limit, u64 after) {
    std::vector<u64> xs;
    for (u64 p = 10; p <= limit && p != 0; p *= 10)
        if (p > after) xs.push_back(p);
    if (limit > after && (xs.empty() || xs.back() != limit)) xs.push_back(limit);
    return xs;
}

int cmd_classify(const std::string& n_text) {
    u64 n = parse_u64_scientific(n_text);
    if (n < 1 || n >= (1ull << 63))
        throw std::invalid_argument("classify: n must satisfy 1 <= n < 2^63");
    Factorization f = factorize_direct(n);
    std::ostringstream os;
    os << n << ',' << to_string(classify(f)) << ',' << euler_phi(f) << ','
       << psi_exact(f).get_str() << '\n';
    std::cout << os.str();
    return 0;
}

struct CountArgs {
    std::string limit_text;
    std::string checkpoints_text;
    unsigned threads = 0;
    std::string segment_text = "4194304";
    std::string resume_path;
    std::string out_path;
};

int cmd_count(const CountArgs& args) {
    CensusParams p;
    p.limit = parse_u64_scientific(args.limit_text);
    p.threads = args.threads;
    p.segment_size = parse_u64_scientific(args.segment_text);

    std::vector<Checkpoint> rows; // includes rows carried over a resume
    if (!args.resume_path.empty()) {
        std::string text = read_file(args.resume_path);
        auto prior = checkpoints_from_csv(text);
        if (prior.empty())
            throw std::invalid_argument("resume file has no checkpoint rows");
        p.resume = prior.back();
        rows = std::move(prior);
    }
    u64 after = p.resume ? p.resume->x : 0;
    p.checkpoints = default_checkpoints(p.limit, after);
    if (!args.checkpoints_text.empty()) {
        for (u64 x : parse_checkpoint_list(args.checkpoints_text)) {
            if (x > after) p.checkpoints.push_back(x);
        }
    }

    // stderr heartbeat, at most every 2 seconds
    std::mutex hb_mu;
    auto hb_last = std::chrono::steady_clock::now();
    p.progress = [&](u64 done, u64 total) {
        std::lock_guard lk(hb_mu);
        auto now = std::chrono::steady_clock::now();
        if (done == total || now - hb_last > std::chrono::seconds(2)) {
            hb_last = now;
            std::cerr << "nilcount: " << done << "/" << total << " segments\r";
            if (done == total) std::cerr << '\n';
        }
    };

    bool streaming = args.out_path.empty();
    if (streaming) std::cout << checkpoints_to_csv({});
    census(p, [&](const Checkpoint& c) {
        rows.push_back(c);
        if (streaming) {
            std::string csv = checkpoints_to_csv({&rows.back(), 1});
            std::cout << csv.substr(csv.find('\n') + 1) << std::flush;
        } else {
            // rewrite the full file at every checkpoint: crash-safe resume
            write_file_atomic(args.out_path, checkpoints_to_csv(rows));
        }
    });
    if (!streaming && rows.empty())
        write_file_atomic(args.out_path, checkpoints_to_csv(rows));
    return 0;
}

int cmd_coeffs(const std::string& family, unsigned order, unsigned digits,
               const std::string& out_path) {
    if (order > kMaxSeriesOrder)
        throw std::invalid_argument("coeffs: order must be <= 12");
    if (digits < 1 || digits > kMaxEvalDigits)
        throw std::invalid_argument("coeffs: digits must be in [1, 50]");
    FormalSeries s(0);
    if (family == "C") s = gamma_coeffs_at_1(order);
    else if (family == "D") s = gamma_coeffs_at_2(order);
    else if (family == "c") s = c_coeffs(order);
    else if (family == "b") s = b_coeffs(order);
    else if (family == "d") s = d_coeffs(order);
    else throw std::invalid_argument("coeffs: unknown family (use C, D, c, b or d)");
    emit(coeffs_to_csv(s, family, digits), out_path);
    return 0;
}

int cmd_estimate(const std::string& which, const std::string& x_text, unsigned order,
                 double synthetic_L, bool has_synthetic, const std::string& out_path) {
    EstimateParams p;
    p.x = static_cast<double>(parse_u64_scientific(x_text));
    p.order = order;
    if (has_synthetic) p.synthetic_L = synthetic_L;
    double value = 0;
    if (which == "cyclic") value = cyclic_estimate(p);
    else if (which == "strictly-abelian") value = strictly_abelian_estimate(p);
    else if (which == "strictly-nilpotent") value = strictly_nilpotent_estimate(p);
    else throw std::invalid_argument("estimate: unknown --which");
    std::ostringstream os;
    os << std::setprecision(17) << value << '\n';
    emit(os.str(), out_path);
    return 0;
}

struct CompareArgs {
    std::string limit_text;
    std::string checkpoints_text;
    std::string census_path;
    unsigned order = 0;
    unsigned threads = 0;
    std::string out_path;
};

int cmd_compare(const CompareArgs& args) {
    std::vector<Checkpoint> cps;
    if (!args.census_path.empty()) {
        cps = checkpoints_from_csv(read_file(args.census_path));
    } else {
        if (args.limit_text.empty())
            throw std::invalid_argument("compare: need --limit or --census");
        CensusParams p;
        p.limit = parse_u64_scientific(args.limit_text);
        p.threads = args.threads;
        p.checkpoints = args.checkpoints_text.empty()
                            ? default_checkpoints(p.limit, 0)
                            : parse_checkpoint_list(args.checkpoints_text);
        census(p, [&](const Checkpoint& c) { cps.push_back(c); });
    }
    auto rows = compare_table(cps, args.order);
    emit(compare_table_to_csv(rows), args.out_path);
    return 0;
}

struct CheckArgs {
    std::string suite;
    double L = 15;
    unsigned order = 0;
    bool has_order = false;
    double lambda = 1e4;
    std::string z_text = "1e8";
    std::string T_text;
    std::string cap_text;
    int power = 0;
    std::string out_path;
};

int cmd_check(const CheckArgs& args) {
    std::vector<CheckRow> rows;
    bool report_only = false;
    if (args.suite == "gamma") {
        unsigned kmax = args.has_order ? args.order : 8;
        auto rep = gamma_quadrature_check(kmax);
        rows = rep.rows;
    } else if (args.suite == "integral") {
        unsigned M = args.has_order ? args.order : 4;
        for (unsigned s = 1; s <= 2; ++s) {
            auto rep = integral_series_check(args.L, s, M);
            rows.insert(rows.end(), rep.rows.begin(), rep.rows.end());
        }
    } else if (args.suite == "lemmas") {
        std::vector<std::tuple<double, int, u64>> configs;
        if (!args.T_text.empty() || !args.cap_text.empty() || args.power != 0) {
            if (args.T_text.empty() || args.cap_text.empty() || args.power == 0)
                throw std::invalid_argument("check lemmas: need all of --T, --cap, --power");
            configs.emplace_back(static_cast<double>(parse_u64_scientific(args.T_text)),
                                 args.power, parse_u64_scientific(args.cap_text));
        } else {
            configs = {{1e6, 2, 1000000000ull}, {1e4, 3, 100000000ull}, {1e3, 4, 10000000ull}};
        }
        for (auto [T, power, cap] : configs) {
            auto rep = lemma_tail_check(T, power, cap);
            rows.insert(rows.end(), rep.rows.begin(), rep.rows.end());
        }
    } else if (args.suite == "mertens") {
        auto rep = mertens_product_check(parse_u64_scientific(args.z_text));
        rows = rep.rows;
    } else if (args.suite == "tau") {
        unsigned N = args.has_order ? args.order : 2;
        auto rep = tau_expansion_check(args.lambda, N);
        rows = rep.rows;
        report_only = true;
    } else {
        throw std::invalid_argument("check: unknown --suite (gamma, integral, lemmas, mertens, tau)");
    }
    emit(check_rows_to_csv(rows), args.out_path);
    if (report_only) return 0;
    for (const CheckRow& r : rows)
        if (r.pass && !*r.pass) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"census and asymptotics of cyclic, strictly abelian and strictly nilpotent numbers"};
    app.require_subcommand(1);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "print n,class,phi,psi for one integer");
    std::string n_text;
    classify_cmd->add_option("n", n_text, "integer to classify (1 <= n < 2^63)")->required();

    // count
    auto* count_cmd = app.add_subcommand("count", "count the four classes over [1, limit]");
    CountArgs count_args;
    count_cmd->add_option("--limit", count_args.limit_text, "count up to this bound")->required();
    count_cmd->add_option("--checkpoints", count_args.checkpoints_text,
                          "comma list of checkpoint x values (added to powers of 10)");
    count_cmd->add_option("--threads", count_args.threads, "worker threads (default: all cores)");
    count_cmd->add_option("--segment-size", count_args.segment_text,
                          "integers per segment (default 4194304)");
    count_cmd->add_option("--resume", count_args.resume_path, "checkpoint CSV to resume from");
    count_cmd->add_option("--out", count_args.out_path, "write CSV here (atomic) instead of stdout");

    // coeffs
    auto* coeffs_cmd = app.add_subcommand("coeffs", "exact coefficient tables (families C, D, c, b, d)");
    std::string family;
    unsigned coeffs_order = 3;
    unsigned digits = 30;
    std::string coeffs_out;
    coeffs_cmd->add_option("--family", family, "C, D, c, b or d")->required();
    coeffs_cmd->add_option("--order", coeffs_order, "highest k (<= 12)");
    coeffs_cmd->add_option("--digits", digits, "significant digits for the numeric column");
    coeffs_cmd->add_option("--out", coeffs_out, "write CSV here instead of stdout");

    // estimate
    auto* est_cmd = app.add_subcommand("estimate", "truncated asymptotic estimates");
    std::string which, x_text, est_out;
    unsigned est_order = 0;
    double synthetic_L = 0;
    est_cmd->add_option("--which", which, "cyclic, strictly-abelian or strictly-nilpotent")->required();
    est_cmd->add_option("--x", x_text, "evaluation point")->required();
    est_cmd->add_option("--order", est_order, "truncation order N");
    auto* syn_opt = est_cmd->add_option("--synthetic-L", synthetic_L,
                                        "override logloglog x for the series factor");
    est_cmd->add_option("--out", est_out, "write here instead of stdout");

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "census counts next to the estimates");
    CompareArgs cmp_args;
    cmp_cmd->add_option("--limit", cmp_args.limit_text, "run a census up to this bound");
    cmp_cmd->add_option("--checkpoints", cmp_args.checkpoints_text, "comma list of x values");
    cmp_cmd->add_option("--census", cmp_args.census_path, "reuse an existing checkpoint CSV");
    cmp_cmd->add_option("--order", cmp_args.order, "estimate truncation order");
    cmp_cmd->add_option("--threads", cmp_args.threads, "worker threads");
    cmp_cmd->add_option("--out", cmp_args.out_path, "write CSV here instead of stdout");

    // check
    auto* check_cmd = app.add_subcommand("check", "numeric validation suites");
    CheckArgs check_args;
    check_cmd->add_option("--suite", check_args.suite, "gamma, integral, lemmas, mertens or tau")
        ->required();
    check_cmd->add_option("--L", check_args.L, "integral suite: expansion parameter (>= 5)");
    auto* order_opt = check_cmd->add_option("--order", check_args.order, "suite-specific order");
    check_cmd->add_option("--lambda", check_args.lambda, "tau suite: window size parameter");
    check_cmd->add_option("--z", check_args.z_text, "mertens suite: product bound");
    check_cmd->add_option("--T", check_args.T_text, "lemmas suite: tail start");
    check_cmd->add_option("--cap", check_args.cap_text, "lemmas suite: sieve bound");
    check_cmd->add_option("--power", check_args.power, "lemmas suite: 2, 3 or 4");
    check_cmd->add_option("--out", check_args.out_path, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*classify_cmd) return cmd_classify(n_text);
        if (*count_cmd) return cmd_count(count_args);
        if (*coeffs_cmd) return cmd_coeffs(family, coeffs_order, digits, coeffs_out);
        if (*est_cmd)
            return cmd_estimate(which, x_text, est_order, synthetic_L, syn_opt->count() > 0, est_out);
        if (*cmp_cmd) return cmd_compare(cmp_args);
        if (*check_cmd) {
            check_args.has_order = order_opt->count() > 0;
            return cmd_check(check_args);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
