// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion is checked with the independent verifiers, never
// with the construction's own bookkeeping.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hullcode/cli.hpp"
#include "hullcode/hullcode.hpp"

using namespace hullcode;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Constructed codes are kept so the Gram criterion can inspect them.
struct Built {
    ConstructionResult result;
};
std::vector<Built> g_built;

struct GridTally {
    std::size_t eligible = 0, verified = 0, exhausted = 0;
    std::vector<std::string> failures;
};

GridTally realize(const std::vector<std::uint64_t>& qs) {
    GridTally tally;
    for (const auto q : qs)
        for (const std::size_t m : {8u, 12u, 16u})
            for (std::size_t k = 1; k <= 3; ++k)
                for (std::size_t t = 0; t <= k; ++t)
                    for (const std::size_t d : {2u, 3u}) {
                        if (!gv_condition(q, m, k, d).holds) continue;
                        ++tally.eligible;
                        std::ostringstream id;
                        id << "(q=" << q << " m=" << m << " k=" << k << " t=" << t << " d=" << d << ")";
                        try {
                            ConstructionParams p;
                            p.q = q, p.m = m, p.k = k, p.t = t, p.d = d, p.seed = 1000 * q + 10 * m + k;
                            ConstructionResult r = construct(p);
                            const std::size_t copies = block_multiplicity(construction_case(q));
                            // recompute from the generator alone
                            const LinearCode& c = r.code;
                            const bool ok = c.dimension() == k && c.length() == copies * m + k &&
                                            hull_dimension_gram(c) == t && hull_dimension_intersection(c) == t &&
                                            min_distance(c) >= copies * d;
                            if (ok) {
                                ++tally.verified;
                                g_built.push_back({std::move(r)});
                            } else {
                                tally.failures.push_back(id.str() + " failed verification");
                            }
                        } catch (const SearchExhausted&) {
                            ++tally.exhausted;
                            tally.failures.push_back(id.str() + " search exhausted");
                        } catch (const std::exception& e) {
                            tally.failures.push_back(id.str() + " " + e.what());
                        }
                    }
    return tally;
}

Verdict grid_verdict(const GridTally& t, double elapsed, double budget) {
    Verdict v;
    v.pass = t.failures.empty() && t.eligible > 0 && elapsed < budget;
    std::ostringstream s;
    s << t.verified << "/" << t.eligible << " eligible points verified, " << t.exhausted << " exhausted, "
      << std::fixed;
    s.precision(2);
    s << elapsed << " s (budget " << budget << " s)";
    if (!t.failures.empty()) s << "; first failure " << t.failures.front();
    v.detail = s.str();
    return v;
}

Verdict criterion1() {
    const auto start = Clock::now();
    const GridTally t = realize({2, 4, 8});
    return grid_verdict(t, seconds_since(start), 60);
}

Verdict criterion2() {
    const auto start = Clock::now();
    const GridTally t = realize({5, 9, 13, 3, 7, 11});
    return grid_verdict(t, seconds_since(start), 120);
}

Verdict criterion3() {
    std::size_t bad = 0;
    for (const auto& b : g_built) {
        const ConstructionResult& r = b.result;
        const FieldMatrix g = gram(r.code.generator());
        const std::size_t k = r.params.k, t = r.params.t;
        bool ok = g.is_diagonal();
        std::size_t zeros = 0;
        for (std::size_t i = 0; i < k; ++i) zeros += g(i, i) == 0;
        ok = ok && zeros == t;
        if (r.kind != ConstructionCase::Even) {
            const FieldMatrix delta = detail::delta_block(r.code.field(), k, t);
            ok = ok && g == delta * delta;
        }
        bad += !ok;
    }
    return {bad == 0 && !g_built.empty(),
            std::to_string(g_built.size() - bad) + "/" + std::to_string(g_built.size()) + " Gram matrices as required"};
}

Verdict criterion4() {
    std::size_t checked = 0, violations = 0;
    for (const std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
        for (std::size_t m = 1; m <= 20; ++m)
            for (std::size_t k = 1; k <= m; ++k)
                for (std::size_t d = 1; d <= m; ++d) {
                    const BoundReport gv = gv_condition(q, m, k, d);
                    ++checked;
                    if (2 * (d - 1) <= m) {
                        for (const auto form : {SimplifiedForm::Displayed, SimplifiedForm::Intermediate})
                            if (simplified_condition(q, m, k, d, form).holds && !gv.holds) ++violations;
                    }
                    // eps_k = 1 - (1 + theta) / q^(m - 2k + 2), also defined for k = 1
                    const long long e = static_cast<long long>(m) - 2 * static_cast<long long>(k) + 2;
                    const Rational eps_k = Rational(1) - Rational(gv.lhs) / rational_power(q, e);
                    if ((eps_k > 0) != gv.holds) ++violations;
                    if (k >= 2 && (gv.epsilons.back() > 0) != gv.holds) ++violations;
                }
    return {violations == 0, std::to_string(checked) + " points, " + std::to_string(violations) + " violations"};
}

Verdict criterion5() {
    struct Point {
        std::uint64_t q;
        std::size_t m, k, d;
    };
    const std::vector<Point> candidates{{2, 10, 2, 2}, {3, 10, 2, 2}, {2, 12, 3, 2}, {5, 8, 2, 2},
                                        {4, 8, 2, 2},  {2, 16, 3, 3}, {3, 12, 3, 2}, {7, 8, 2, 2}};
    constexpr int kTrials = 1000;
    const auto start = Clock::now();
    std::size_t used = 0, failed = 0;
    std::ostringstream s;
    for (const auto& p : candidates) {
        const double bound = static_cast<double>(success_probability_lower_bound(p.q, p.m, p.k, p.d));
        if (bound < 0.01) continue;
        ++used;
        const Field f = Field::of_order(static_cast<std::uint32_t>(p.q));
        std::mt19937_64 rng(p.q * 7919 + p.m * 31 + p.k);
        int hits = 0;
        for (int i = 0; i < kTrials; ++i) hits += iid_trial(f, p.m, p.k, p.d, rng);
        const double freq = double(hits) / kTrials;
        const double sigma = std::sqrt(bound * (1 - bound) / kTrials);
        const bool ok = freq >= bound - 3 * sigma;
        failed += !ok;
        s.precision(3);
        s << " (" << p.q << "," << p.m << "," << p.k << "," << p.d << ") freq " << freq << " bound " << bound
          << " floor " << bound - 3 * sigma << (ok ? "" : " FAIL") << ";";
    }
    const double elapsed = seconds_since(start);
    return {used >= 5 && failed == 0 && elapsed < 120,
            std::to_string(used) + " points," + s.str() + " " + std::to_string(elapsed) + " s"};
}

Verdict criterion6() {
    const Field f2 = Field::make(2, 1);
    const LinearCode hamming(FieldMatrix::from_rows(
        f2, {{1, 0, 0, 0, 0, 1, 1}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1, 1}}));
    const std::size_t dist = min_distance(hamming), dual_dim = dual(hamming).dimension();
    const std::size_t h11 = hull_dimension(LinearCode(FieldMatrix::from_rows(f2, {{1, 1}})));
    const std::size_t h10 = hull_dimension(LinearCode(FieldMatrix::from_rows(f2, {{1, 0}})));
    return {dist == 3 && dual_dim == 3 && h11 == 1 && h10 == 0,
            "d(Hamming)=" + std::to_string(dist) + " dim dual=" + std::to_string(dual_dim) +
                " hull(11)=" + std::to_string(h11) + " hull(10)=" + std::to_string(h10)};
}

Verdict criterion7() {
    long double worst_eps = 0, worst_sym = 0;
    const long double h_half = entropy(0.5L);
    for (int i = 1; i <= 99; ++i) {
        const long double delta = i / 200.0L;  // strictly inside (0, 1/2)
        const long double expected = (1 - delta - entropy(delta)) / 2;
        worst_eps = std::max(worst_eps, std::fabs(epsilon0(delta, 2) - expected));
        const long double x = i / 100.0L;
        worst_sym = std::max(worst_sym, std::fabs(entropy(x) - entropy(1 - x)));
    }
    std::ostringstream s;
    s << "|H(1/2)-1|=" << std::fabs(h_half - 1) << " max eps0 error=" << worst_eps << " max asymmetry=" << worst_sym;
    return {std::fabs(h_half - 1) <= 1e-12L && worst_eps <= 1e-12L && worst_sym <= 1e-12L, s.str()};
}

Verdict criterion8() {
    ConstructionParams p;
    p.q = 9, p.m = 12, p.k = 3, p.t = 1, p.d = 3, p.seed = 20240601;
    const std::string g1 = to_json(construct(p).code).dump();
    const std::string g2 = to_json(construct(p).code).dump();

    cli::ScanSpec spec;
    spec.q = {2, 3, 5};
    spec.m = {8};
    spec.k = {1, 2};
    spec.d = {2, 3};
    spec.seeds = {0, 1};
    const std::string csv1 = cli::scan_to_csv(cli::run_scan(spec, 1));
    const std::string csv2 = cli::scan_to_csv(cli::run_scan(spec, 4));
    return {g1 == g2 && csv1 == csv2, std::string("generator ") + (g1 == g2 ? "identical" : "differs") + ", scan CSV " +
                                          (csv1 == csv2 ? "identical" : "differs") + " (" +
                                          std::to_string(csv1.size()) + " bytes)"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"1 hull/distance realization, q even", criterion1},
        {"2 hull/distance realization, q odd", criterion2},
        {"3 Gram structure", criterion3},
        {"4 bound consistency", criterion4},
        {"5 probability bound dominance", criterion5},
        {"6 oracle fixtures", criterion6},
        {"7 asymptotics", criterion7},
        {"8 determinism", criterion8},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        failures += !v.pass;
        std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
