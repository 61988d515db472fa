#pragma once

// Batch front end: construct, verify, bound, scan.
//
// Exit codes: 0 success, 1 invalid input, 2 search exhausted,
// 3 verification or expectation mismatch.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hullcode/bounds.hpp"
#include "hullcode/codes.hpp"
#include "hullcode/construct.hpp"
#include "hullcode/serialize.hpp"

namespace hullcode::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kSearchExhausted = 2, kMismatch = 3 };

/// Parses "2,3,5", "8..12", "0..3,7" or "" into an ordered list. A range with
/// lo > hi is empty.
inline std::vector<std::uint64_t> parse_int_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) continue;
        const auto dots = item.find("..");
        try {
            std::size_t used = 0;
            if (dots == std::string::npos) {
                out.push_back(std::stoull(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } else {
                const std::string lo_s = item.substr(0, dots), hi_s = item.substr(dots + 2);
                const auto lo = std::stoull(lo_s, &used);
                if (used != lo_s.size()) throw std::invalid_argument(item);
                const auto hi = std::stoull(hi_s, &used);
                if (used != hi_s.size()) throw std::invalid_argument(item);
                for (auto v = lo; v <= hi; ++v) out.push_back(v);
            }
        } catch (const std::logic_error&) {
            throw Error(Errc::InvalidParams, "cannot parse integer list item '" + item + "'");
        }
    }
    return out;
}

struct ScanSpec {
    std::vector<std::uint64_t> q, m, k, d, seeds;
    std::optional<std::vector<std::uint64_t>> t;  // all of 0..k when absent
    std::string format = "json";
};

/// Fields of a JSON scan spec are either range strings or integer arrays.
inline ScanSpec scan_spec_from_json(const json& j) {
    const auto list = [&](const char* key) -> std::optional<std::vector<std::uint64_t>> {
        if (!j.contains(key)) return std::nullopt;
        const json& v = j.at(key);
        if (v.is_string()) return parse_int_list(v.get<std::string>());
        if (v.is_number_unsigned()) return std::vector<std::uint64_t>{v.get<std::uint64_t>()};
        return v.get<std::vector<std::uint64_t>>();
    };
    ScanSpec s;
    s.q = list("q").value_or(std::vector<std::uint64_t>{});
    s.m = list("m").value_or(std::vector<std::uint64_t>{});
    s.k = list("k").value_or(std::vector<std::uint64_t>{});
    s.d = list("d").value_or(std::vector<std::uint64_t>{});
    s.seeds = list("seeds").value_or(std::vector<std::uint64_t>{0});
    s.t = list("t");
    if (j.contains("format")) s.format = j.at("format").get<std::string>();
    return s;
}

struct ScanRow {
    std::uint64_t q = 0, m = 0, k = 0, t = 0, d = 0, seed = 0;
    std::string status;  // ok | skipped | exhausted | error
    std::optional<bool> bound_holds;
    std::optional<ConstructionResult> result;
    std::uint64_t attempts = 0, restarts = 0;
    std::string reason;
};

/// Grid points in (q, m, k, t, d, seed) order; invalid points are returned
/// pre-marked as skipped.
inline std::vector<ScanRow> expand_grid(const ScanSpec& spec) {
    std::vector<ScanRow> rows;
    for (const auto q : spec.q)
        for (const auto m : spec.m)
            for (const auto k : spec.k) {
                std::vector<std::uint64_t> ts;
                if (spec.t) {
                    ts = *spec.t;
                } else {
                    for (std::uint64_t t = 0; t <= k; ++t) ts.push_back(t);
                }
                for (const auto t : ts)
                    for (const auto d : spec.d)
                        for (const auto seed : spec.seeds) {
                            ScanRow r;
                            r.q = q, r.m = m, r.k = k, r.t = t, r.d = d, r.seed = seed;
                            if (!prime_power_decomposition(q))
                                r.reason = "q not a prime power";
                            else if (k < 1)
                                r.reason = "k below 1";
                            else if (k > m)
                                r.reason = "k exceeds m";
                            else if (t > k)
                                r.reason = "t exceeds k";
                            else if (d < 1)
                                r.reason = "d below 1";
                            else if (d > m)
                                r.reason = "d exceeds m";
                            if (!r.reason.empty()) r.status = "skipped";
                            rows.push_back(std::move(r));
                        }
            }
    return rows;
}

inline void run_row(ScanRow& r) {
    if (r.status == "skipped") return;
    try {
        r.bound_holds = gv_condition(r.q, r.m, r.k, r.d).holds;
        ConstructionParams p;
        p.q = r.q, p.m = r.m, p.k = r.k, p.t = r.t, p.d = r.d, p.seed = r.seed;
        r.result = construct(p);
        r.attempts = r.result->attempts;
        r.restarts = r.result->restarts;
        r.status = "ok";
    } catch (const SearchExhausted& e) {
        r.status = "exhausted";
        r.attempts = e.attempts();
        r.restarts = e.restarts();
        r.reason = "search exhausted";
    } catch (const std::exception& e) {
        r.status = "error";
        r.reason = e.what();
    }
}

/// Runs every row on up to `jobs` threads; row order is grid order.
inline std::vector<ScanRow> run_scan(const ScanSpec& spec, unsigned jobs) {
    std::vector<ScanRow> rows = expand_grid(spec);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(rows.size(), 1))));
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) run_row(rows[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return rows;
}

inline const char* kScanCsvHeader =
    "q,m,k,t,d,seed,bound_holds,status,case,n,guaranteed_distance,attempts,restarts,hull_dim,min_distance,reason";

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << kScanCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.q << ',' << r.m << ',' << r.k << ',' << r.t << ',' << r.d << ',' << r.seed << ',';
        out << (r.bound_holds ? (*r.bound_holds ? "true" : "false") : "") << ',' << r.status << ',';
        if (r.result) {
            out << to_string(r.result->kind) << ',' << r.result->code.length() << ','
                << r.result->guaranteed_distance << ',';
        } else {
            out << ",,,";
        }
        if (r.status == "ok" || r.status == "exhausted") {
            out << r.attempts << ',' << r.restarts << ',';
        } else {
            out << ",,";
        }
        if (r.result) {
            out << r.result->report.hull_dim_gram << ',' << r.result->report.min_distance << ',';
        } else {
            out << ",,";
        }
        out << csv_field(r.reason) << '\n';
    }
    return out.str();
}

inline json scan_to_json(const std::vector<ScanRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        json row{{"q", r.q}, {"m", r.m}, {"k", r.k}, {"t", r.t}, {"d", r.d}, {"seed", r.seed}, {"status", r.status}};
        row["bound_holds"] = r.bound_holds ? json(*r.bound_holds) : json(nullptr);
        if (r.status == "ok" || r.status == "exhausted") {
            row["attempts"] = r.attempts;
            row["restarts"] = r.restarts;
        }
        if (r.result) {
            row["case"] = std::string(to_string(r.result->kind));
            row["n"] = r.result->code.length();
            row["guaranteed_distance"] = r.result->guaranteed_distance;
            row["report"] = to_json(r.result->report);
        }
        if (!r.reason.empty()) row["reason"] = r.reason;
        out.push_back(std::move(row));
    }
    return out;
}

namespace detail {

inline unsigned default_jobs() {
    if (const char* env = std::getenv("HULLCODE_JOBS")) {
        try {
            const auto v = std::stoul(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::logic_error&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

inline int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << text;
        return kOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open " << path << " for writing\n";
        return kInvalidInput;
    }
    file << text;
    return kOk;
}

inline std::optional<json> read_json_file(const std::string& path, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot read " << path << '\n';
        return std::nullopt;
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        err << "error: " << path << ": " << e.what() << '\n';
        return std::nullopt;
    }
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Linear codes with prescribed hull dimension and minimum distance", "hullcode"};
    app.require_subcommand(1);

    // construct
    ConstructionParams cp;
    std::string construct_out;
    auto* construct_cmd = app.add_subcommand("construct", "build and verify a code");
    construct_cmd->add_option("--q", cp.q, "field size (prime power)")->required();
    construct_cmd->add_option("--m", cp.m, "length of the sampled vectors")->required();
    construct_cmd->add_option("--k", cp.k, "code dimension")->required();
    construct_cmd->add_option("--t", cp.t, "hull dimension")->required();
    construct_cmd->add_option("--d", cp.d, "distance of the sampled span")->required();
    construct_cmd->add_option("--seed", cp.seed, "random seed")->required();
    construct_cmd->add_option("--out", construct_out, "output file (default: stdout)");
    construct_cmd->add_option("--max-attempts", cp.max_attempts_per_vector, "draws per vector before restart");
    construct_cmd->add_option("--max-restarts", cp.max_restarts, "restarts before giving up");

    // verify
    std::string verify_in;
    std::optional<std::size_t> expect_hull, expect_distance;
    auto* verify_cmd = app.add_subcommand("verify", "recompute hull dimension and minimum distance");
    verify_cmd->add_option("--in", verify_in, "code JSON file")->required();
    verify_cmd->add_option("--expect-hull", expect_hull, "required hull dimension");
    verify_cmd->add_option("--expect-distance", expect_distance, "required lower bound on the minimum distance");

    // bound
    std::optional<std::uint64_t> bq, bm, bk, bd;
    bool simplified = false, intermediate = false, rate_threshold = false;
    std::optional<double> delta;
    auto* bound_cmd = app.add_subcommand("bound", "evaluate the existence condition");
    bound_cmd->add_option("--q", bq, "field size");
    bound_cmd->add_option("--m", bm);
    bound_cmd->add_option("--k", bk);
    bound_cmd->add_option("--d", bd);
    bound_cmd->add_flag("--simplified", simplified, "use the binomial-only sufficient condition");
    bound_cmd->add_flag("--intermediate", intermediate, "with --simplified: keep the (q-1)^d factor");
    bound_cmd->add_flag("--rate-threshold", rate_threshold, "print the asymptotic rate threshold");
    bound_cmd->add_option("--delta", delta, "relative distance d/m for --rate-threshold");

    // scan
    std::string sq, sm, sk, st, sd, sseeds, spec_file, scan_out, format;
    unsigned jobs = detail::default_jobs();
    auto* scan_cmd = app.add_subcommand("scan", "construct over a parameter grid");
    auto* opt_q = scan_cmd->add_option("--q", sq, "field sizes, e.g. 2,3,5");
    auto* opt_m = scan_cmd->add_option("--m", sm, "e.g. 8 or 8..12");
    auto* opt_k = scan_cmd->add_option("--k", sk);
    auto* opt_t = scan_cmd->add_option("--t", st, "default: every t in 0..k");
    auto* opt_d = scan_cmd->add_option("--d", sd);
    auto* opt_seeds = scan_cmd->add_option("--seeds", sseeds, "default: 0");
    auto* opt_format = scan_cmd->add_option("--format", format, "json or csv");
    scan_cmd->add_option("--spec", spec_file, "JSON scan spec; flags override its fields");
    scan_cmd->add_option("--out", scan_out, "output file (default: stdout)");
    scan_cmd->add_option("--jobs", jobs, "parallel rows (default: $HULLCODE_JOBS or core count)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        if (construct_cmd->parsed()) {
            try {
                const ConstructionResult r = construct(cp);
                return detail::emit(to_json(r).dump(2) + "\n", construct_out, out, err);
            } catch (const SearchExhausted& e) {
                err << "error: " << e.what() << '\n';
                return kSearchExhausted;
            } catch (const Error& e) {
                err << "error: " << e.what() << '\n';
                return e.code() == Errc::VerificationFailed ? kMismatch : kInvalidInput;
            }
        }

        if (verify_cmd->parsed()) {
            const auto doc = detail::read_json_file(verify_in, err);
            if (!doc) return kInvalidInput;
            std::optional<LinearCode> code;
            try {
                code = code_from_json(*doc);
            } catch (const std::exception& e) {
                err << "error: " << e.what() << '\n';
                return kInvalidInput;
            }
            VerificationReport report;
            try {
                report = verify(*code);
            } catch (const Error& e) {
                err << "error: " << e.what() << '\n';
                return e.code() == Errc::InternalInconsistency ? kMismatch : kInvalidInput;
            }
            json j{{"n", code->length()}, {"k", code->dimension()}, {"report", to_json(report)}};
            bool ok = true;
            if (expect_hull) {
                const bool met = report.hull_dim_gram == *expect_hull;
                j["expect_hull"] = {{"value", *expect_hull}, {"met", met}};
                if (!met) err << "hull dimension " << report.hull_dim_gram << " != expected " << *expect_hull << '\n';
                ok = ok && met;
            }
            if (expect_distance) {
                const bool met = report.min_distance >= *expect_distance;
                j["expect_distance"] = {{"value", *expect_distance}, {"met", met}};
                if (!met)
                    err << "minimum distance " << report.min_distance << " < expected " << *expect_distance << '\n';
                ok = ok && met;
            }
            out << j.dump(2) << '\n';
            return ok ? kOk : kMismatch;
        }

        if (bound_cmd->parsed()) {
            if (rate_threshold) {
                if (!delta || !bq) {
                    err << "error: --rate-threshold needs --delta and --q\n";
                    return kInvalidInput;
                }
                const long double e0 = epsilon0(static_cast<long double>(*delta), *bq);
                json j{{"delta", *delta}, {"q", *bq}, {"epsilon0", static_cast<double>(e0)}};
                out << j.dump(2) << '\n';
                return kOk;
            }
            if (!bq || !bm || !bk || !bd) {
                err << "error: bound needs --q --m --k --d\n";
                return kInvalidInput;
            }
            if (intermediate && !simplified) {
                err << "error: --intermediate only applies with --simplified\n";
                return kInvalidInput;
            }
            const BoundReport b =
                simplified ? simplified_condition(*bq, *bm, *bk, *bd,
                                                  intermediate ? SimplifiedForm::Intermediate : SimplifiedForm::Displayed)
                           : gv_condition(*bq, *bm, *bk, *bd);
            json j = to_json(b);
            if (simplified) j["form"] = intermediate ? "intermediate" : "simplified";
            out << j.dump(2) << '\n';
            return kOk;
        }

        if (scan_cmd->parsed()) {
            ScanSpec spec;
            if (!spec_file.empty()) {
                const auto doc = detail::read_json_file(spec_file, err);
                if (!doc) return kInvalidInput;
                spec = scan_spec_from_json(*doc);
            } else {
                spec.seeds = {0};
            }
            if (opt_q->count()) spec.q = parse_int_list(sq);
            if (opt_m->count()) spec.m = parse_int_list(sm);
            if (opt_k->count()) spec.k = parse_int_list(sk);
            if (opt_t->count()) spec.t = parse_int_list(st);
            if (opt_d->count()) spec.d = parse_int_list(sd);
            if (opt_seeds->count()) spec.seeds = parse_int_list(sseeds);
            if (opt_format->count()) spec.format = format;
            if (spec.format != "json" && spec.format != "csv") {
                err << "error: --format must be json or csv\n";
                return kInvalidInput;
            }
            const auto rows = run_scan(spec, jobs);
            for (const auto& r : rows)
                if (r.status == "skipped")
                    err << "skip q=" << r.q << " m=" << r.m << " k=" << r.k << " t=" << r.t << " d=" << r.d << ": "
                        << r.reason << '\n';
            const std::string text = spec.format == "csv" ? scan_to_csv(rows) : scan_to_json(rows).dump(2) + "\n";
            return detail::emit(text, scan_out, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace hullcode::cli
