// Runs acceptance criteria 1-9 and prints one PASS/FAIL line for each.
// Exit status is 0 only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../cli/run_cli.hpp"
#include "modinv/component.hpp"
#include "modinv/cpaction.hpp"
#include "modinv/paths.hpp"
#include "modinv/polarize.hpp"
#include "modinv/reports.hpp"
#include "modinv/sagbi.hpp"
#include "modinv/sl2.hpp"
#include "modinv/straighten.hpp"

using namespace modinv;

namespace {

constexpr std::uint64_t kSeed = 0x6d6f64696e76ULL;
const unsigned kWorkers = std::max(2u, std::thread::hardware_concurrency());

struct Outcome {
    bool ok = true;
    std::string detail;
};

void note(Outcome& o, bool ok, const std::string& what)
{
    if (!ok) {
        o.ok = false;
        o.detail += (o.detail.empty() ? "" : "; ") + what;
    }
}

Coeff factorial_mod(std::uint32_t n, const PrimeField& F)
{
    Coeff out = 1 % F.p();
    for (std::uint32_t k = 2; k <= n; ++k)
        out = F.mul(out, F.reduce(k));
    return out;
}

Polynomial random_in(std::mt19937_64& rng, const MultiDegree& lam, const PrimeField& F)
{
    Component comp(lam);
    std::vector<Coeff> v(comp.dim());
    for (auto& c : v)
        c = static_cast<Coeff>(rng() % F.p());
    return comp.from_dense(v, F);
}

// 1. counting corollary
Outcome criterion1()
{
    Outcome o;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        CountTables t = count_tables(12, p);
        for (std::uint32_t d = 0; d <= 12; ++d) {
            PathTally b = tally_paths(d, p);
            bool brute = b.idp == t.nu_bar[d];
            for (std::uint32_t h = 0; h + 2 <= p; ++h)
                brute = brute && b.pdp[h] == t.nu[d][h];
            bool cor = t.mu[d][p - 1] == t.nu_bar[d];
            for (std::uint32_t h = 1; h < p; ++h)
                cor = cor && t.mu[d][h - 1] == t.nu[d][h - 1];
            note(o, brute, "brute force differs at p=" + std::to_string(p) + " d=" + std::to_string(d));
            note(o, cor, "corollary fails at p=" + std::to_string(p) + " d=" + std::to_string(d));
        }
    }
    if (o.ok)
        o.detail = "p in {2,3,5,7}, d <= 12";
    return o;
}

// 2. tensor decomposition via theta invariants
Outcome criterion2()
{
    Outcome o;
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint32_t d = 1; d <= 8; ++d) {
            Json r = tensor_report(p, d, kWorkers);
            note(o, report_passed(r), "p=" + std::to_string(p) + " d=" + std::to_string(d) + " " + r["checks"].dump());
        }
    if (o.ok)
        o.detail = "dimension sum, invariance, LM = Lambda, length, Lambda image; p in {2,3,5,7}, d <= 8";
    return o;
}

// 3. decomposition of multidegree (1,1,1,2), two independent pipelines
Outcome criterion3()
{
    Outcome o;
    const std::map<std::uint32_t, std::map<std::uint32_t, std::uint64_t>> expected = {
        {7, {{2, 3}, {4, 3}, {6, 1}}}, {5, {{2, 3}, {4, 2}, {5, 2}}}, {3, {{3, 8}}}, {2, {{2, 12}}}};
    for (const auto& [p, want] : expected) {
        PrimeField F(p);
        note(o, decompose_component({1, 1, 1, 2}, F).nonzero() == want, "rank profile, p=" + std::to_string(p));
        note(o, decompose_via_paths({1, 1, 1, 2}, F).nonzero() == want, "path pipeline, p=" + std::to_string(p));
    }
    if (o.ok)
        o.detail = "3V2+3V4+V6, 3V2+2V4+2V5, 8V3, 12V2; both pipelines";
    return o;
}

// 4. periodicity
Outcome criterion4()
{
    Outcome o;
    for (std::uint32_t p : {3u, 5u, 7u}) {
        PrimeField F(p);
        MultiDegree lam{p + 1, 1, 1, p + 2};
        PeriodicityResult red = periodicity_reduce(lam, p);
        note(o, red.reduced == MultiDegree{1, 1, 1, 2}, "reduction, p=" + std::to_string(p));
        note(o, red.projective_count == 4 * p + 20, "t = 4p+20, p=" + std::to_string(p));
        ModuleDecomposition small = decompose_component(red.reduced, F);
        small.multiplicities[p - 1] += red.projective_count;
        note(o, decompose_component(lam, F) == small, "decomposition, p=" + std::to_string(p));
    }
    if (o.ok)
        o.detail = "p in {3,5,7}";
    return o;
}

// 5. lemma suite
Outcome criterion5()
{
    Outcome o;
    std::mt19937_64 rng(kSeed);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        PrimeField F(p);
        for (std::uint64_t t = 1; t <= 3 * (p - 1); ++t) {
            Coeff brute = 0;
            for (Coeff i = 0; i < p; ++i)
                brute = F.add(brute, F.pow(i, t));
            note(o, power_sum(t, F) == brute, "power_sum p=" + std::to_string(p) + " t=" + std::to_string(t));
        }
    }
    const std::uint32_t primes[] = {3, 5, 7, 11, 13};
    for (int trial = 0; trial < 50; ++trial) {
        PrimeField F(primes[rng() % 5]);
        std::size_t m = 1 + rng() % 6;
        Polynomial yE = Polynomial::constant(m, F, 1), xE = yE;
        std::uint32_t size = 0;
        for (std::size_t i = 1; i <= m; ++i)
            if (size + 1 < F.p() && rng() % 2) {
                yE *= Polynomial::y(m, F, i);
                xE *= Polynomial::x(m, F, i);
                ++size;
            }
        Polynomial f = yE;
        for (std::uint32_t k = 0; k < size; ++k)
            f = apply_sigma(f) - f;
        note(o, f == xE.scaled(factorial_mod(size, F)), "(sigma-1)^|E| y^E, trial " + std::to_string(trial));
    }
    for (int trial = 0; trial < 50; ++trial) {
        PrimeField F(primes[rng() % 3]);
        MultiDegree lam(1 + rng() % 3);
        Coeff scale = 1;
        for (auto& l : lam) {
            l = static_cast<std::uint32_t>(rng() % F.p());
            scale = F.mul(scale, factorial_mod(l, F));
        }
        Polynomial f = random_in(rng, lam, F);
        note(o, restitute(polarize_full(f, lam), BlockSplit(lam)) == f.scaled(scale), "R(P(f)), trial " + std::to_string(trial));
    }
    // LM of traces: R(LM(Tr(y^E))) = LM(Tr(R(y^E)))
    for (int trial = 0; trial < 50;) {
        PrimeField F(rng() % 2 ? 5 : 7);
        MultiDegree sizes(1 + rng() % 3);
        for (auto& s : sizes)
            s = static_cast<std::uint32_t>(rng() % F.p());
        BlockSplit split(sizes);
        const std::size_t n = split.target_blocks();
        if (n == 0)
            continue;
        std::vector<std::uint32_t> e(2 * n, 0);
        for (std::size_t t = 1; t <= n; ++t)
            e[var_index({t, VarKind::Y})] = rng() % 2;
        Polynomial yE = Polynomial::monomial(Monomial(e), F);
        Polynomial tr = transfer(yE), tr_r = transfer(restitute(yE, split));
        if (tr.is_zero()) {
            note(o, tr_r.is_zero(), "LM of traces (zero case)");
            continue;
        }
        note(o, !tr_r.is_zero() &&
                    restitute(Polynomial::monomial(tr.lead_monomial(), F), split).lead_monomial() == tr_r.lead_monomial(),
             "LM of traces, trial " + std::to_string(trial));
        ++trial;
    }
    // compatibility: gamma1 > gamma2 implies LM(P(gamma1)) > LM(P(gamma2))
    for (int trial = 0; trial < 50;) {
        PrimeField F(7);
        MultiDegree lam(1 + rng() % 3);
        for (auto& l : lam)
            l = static_cast<std::uint32_t>(rng() % 5);
        auto basis = component_basis(lam);
        std::size_t a = rng() % basis.size(), b = rng() % basis.size();
        if (a == b)
            continue;
        if (a > b)
            std::swap(a, b);
        Polynomial pa = polarize_full(Polynomial::monomial(basis[a], F), lam);
        Polynomial pb = polarize_full(Polynomial::monomial(basis[b], F), lam);
        note(o, grevlex_cmp(pa.lead_monomial(), pb.lead_monomial()) == std::strong_ordering::greater,
             "compatibility, trial " + std::to_string(trial));
        ++trial;
    }
    if (o.ok)
        o.detail = "power sums p <= 13; 50 each of (sigma-1)^|E|, R(P(f)), LM of traces, compatibility";
    return o;
}

// 6. SAGBI and minimality
Outcome criterion6()
{
    Outcome o;
    std::size_t invariants = 0, transfers = 0;
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t m = 1; m <= 3; ++m) {
            Json r = sagbi_report(p, m, 6, Variant::Minimal, kWorkers);
            invariants += r["invariants_checked"].get<std::size_t>();
            note(o, report_passed(r), "sagbi report p=" + std::to_string(p) + " m=" + std::to_string(m));
            auto minimal = build_generators(p, m, Variant::Minimal);
            for (const auto& g : build_generators(p, m, Variant::Full).elements) {
                if (g.kind != GeneratorKind::TraceE)
                    continue;
                ++transfers;
                std::uint32_t size = 0;
                for (auto e : g.payload)
                    size += e;
                if (size <= 2 * (p - 1)) {
                    note(o, subduct(g.poly, minimal).remainder.is_zero(), g.label() + " does not subduct");
                } else {
                    std::size_t k = 0;
                    while (minimal.elements[k].label() != g.label())
                        ++k;
                    note(o, !subduct(g.poly, minimal.without(k)).remainder.is_zero(), g.label() + " is redundant");
                }
            }
        }
    if (o.ok)
        o.detail = std::to_string(invariants) + " invariants factor and subduct to 0; " + std::to_string(transfers) +
                   " transfers classified";
    return o;
}

// All x/u products of total degree 1..max_deg in m blocks.
std::vector<UProduct> products(std::uint32_t m, std::uint32_t max_deg)
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 1; i <= m; ++i)
        for (std::uint32_t j = i + 1; j <= m; ++j)
            pairs.push_back({i, j});
    std::vector<UProduct> out;
    UProduct cur;
    cur.x_exp.assign(m, 0);
    std::function<void(std::size_t, std::uint32_t)> edges = [&](std::size_t k, std::uint32_t deg) {
        if (k == pairs.size()) {
            if (deg > 0)
                out.push_back(cur);
            return;
        }
        edges(k + 1, deg);
        UProduct save = cur;
        for (std::uint32_t b = 1; deg + 2 * b <= max_deg; ++b) {
            cur.add_edge(pairs[k].first, pairs[k].second);
            edges(k + 1, deg + 2 * b);
        }
        cur = save;
    };
    std::function<void(std::size_t, std::uint32_t)> xs = [&](std::size_t i, std::uint32_t deg) {
        if (i == m) {
            edges(0, deg);
            return;
        }
        for (std::uint32_t a = 0; deg + a <= max_deg; ++a) {
            cur.x_exp[i] = a;
            xs(i + 1, deg + a);
        }
        cur.x_exp[i] = 0;
    };
    xs(0, 0);
    return out;
}

// 7. relations, uncrossing, summand-length criterion
Outcome criterion7()
{
    Outcome o;
    std::string info;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        try {
            verify_relations(4, PrimeField(p));
        } catch (const Error& e) {
            note(o, false, std::string("relations: ") + e.what());
        }
    }
    std::mt19937_64 rng(kSeed + 7);
    int uncrossed = 0;
    while (uncrossed < 100) {
        const std::uint32_t m = 4 + rng() % 3;
        UProduct P;
        P.x_exp.assign(m, 0);
        for (auto& a : P.x_exp)
            a = rng() % 2;
        for (int e = 0, n = 2 + rng() % 3; e < n; ++e) {
            std::uint32_t i = 1 + rng() % m, j = 1 + rng() % m;
            if (i != j)
                P.add_edge(std::min(i, j), std::max(i, j));
        }
        if (P.is_crossing_free())
            continue;
        PrimeField F(7);
        Polynomial sum(m, F);
        bool flat = true;
        for (const auto& t : uncross(P)) {
            flat = flat && t.product.is_crossing_free();
            sum += t.product.expand(F).scaled(F.reduce(t.coeff));
        }
        note(o, flat && sum == P.expand(F), "uncross " + P.to_string());
        ++uncrossed;
    }

    std::uint64_t total = 0, agree_length = 0, agree_lead = 0;
    std::string first_mismatch;
    std::map<std::uint32_t, std::uint64_t> mismatches;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        PrimeField F(p);
        std::map<MultiDegree, SigmaFiltration> filtrations;
        std::map<MultiDegree, std::map<std::size_t, std::uint32_t>> leads;
        for (std::uint32_t m = 1; m <= 4; ++m)
            for (const auto& P : products(m, 8)) {
                Polynomial f = P.expand(F);
                if (f.is_zero())
                    continue;
                MultiDegree lam = f.multidegree();
                auto it = filtrations.find(lam);
                if (it == filtrations.end()) {
                    it = filtrations.emplace(lam, SigmaFiltration(lam, F)).first;
                    leads[lam] = it->second.lead_lengths();
                }
                const SigmaFiltration& filt = it->second;
                std::uint32_t crit = summand_length_of_product(P, p);
                std::uint32_t len = filt.length(filt.component().to_dense(f));
                std::uint32_t lead_len = leads[lam].at(filt.component().index(f.lead_monomial()));
                ++total;
                agree_lead += crit == lead_len;
                if (crit == len) {
                    ++agree_length;
                } else {
                    ++mismatches[p];
                    if (first_mismatch.empty())
                        first_mismatch = P.to_string() + " at p=" + std::to_string(p) + ": criterion " +
                                         std::to_string(crit) + ", length " + std::to_string(len);
                }
            }
    }
    std::ostringstream ss;
    ss << "summand_length_of_product = length(f) on " << agree_length << "/" << total << " products";
    if (!mismatches.empty()) {
        ss << " (mismatches";
        for (auto [p, n] : mismatches)
            ss << " p=" << p << ":" << n;
        ss << "; first " << first_mismatch << ")";
    }
    ss << "; equals the summand length of LM(f) on " << agree_lead << "/" << total;
    note(o, agree_length == total, ss.str());
    if (o.ok)
        o.detail = "relations m=4, 100 uncrossings, " + ss.str();
    return o;
}

// 8. SL2 generators and lemmas
Outcome criterion8()
{
    Outcome o;
    SL2Options opts;
    opts.workers = kWorkers;
    auto r = minimal_generators_sl2(3, 3, 9, opts);
    note(o, r.total == 28, "p=3 m=3 gives " + std::to_string(r.total) + " generators");
    std::vector<std::uint32_t> degrees;
    for (auto [d, n] : r.per_degree)
        degrees.push_back(d);
    note(o, degrees == std::vector<std::uint32_t>{2, 4, 6, 8}, "p=3 m=3 degrees");
    for (std::uint32_t m : {3u, 4u}) {
        auto rm = minimal_generators_sl2(2, m, m + 2, opts);
        note(o, rm.noether_number == m, "p=2 m=" + std::to_string(m) + " Noether " + std::to_string(rm.noether_number));
    }
    auto r22 = minimal_generators_sl2(2, 2, 5, opts);
    note(o, r22.noether_number == 3, "p=2 m=2 Noether " + std::to_string(r22.noether_number));
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t m = 1; m <= 3; ++m) {
            note(o, lemma_L_holds(PrimeField(p), m), "L identities p=" + std::to_string(p) + " m=" + std::to_string(m));
            note(o, lemma_D_holds(PrimeField(p), m), "D substitution p=" + std::to_string(p) + " m=" + std::to_string(m));
        }
    if (o.ok)
        o.detail = "28 generators in degrees {2,4,6,8}; Noether 3, 4 (p=2, m=3,4); 3 (p=2, m=2); lemmas";
    return o;
}

// 9. determinism of every CLI report across runs and worker counts
Outcome criterion9()
{
    Outcome o;
    const char* commands[] = {
        "counts --p 7 --dmax 12",
        "paths --p 5 --d 6",
        "tensor --p 5 --d 7",
        "decompose --p 5 --multidegree 6,1,1,7",
        "decompose --p 7 --multidegree 1,1,1,2 --method both",
        "sagbi --p 3 --m 3 --dmax 5",
        "sagbi --p 2 --m 2 --dmax 4 --variant full",
        "sl2 --p 3 --m 3 --dmax 9",
        "sl2 --p 2 --m 2 --dmax 4 --membership",
        "selftest",
        "counts --p 3 --dmax 6 --format table",
    };
    for (const char* c : commands) {
        auto base = modinv::test::run_cli(MODINV_CLI_PATH, std::string(c) + " --workers 1");
        note(o, base.exit_code == 0 && !base.out.empty(), std::string(c) + " exits " + std::to_string(base.exit_code));
        for (const char* w : {" --workers 1", " --workers 2", " --workers 8"}) {
            auto again = modinv::test::run_cli(MODINV_CLI_PATH, std::string(c) + w);
            note(o, again.out == base.out, std::string(c) + w + " differs");
        }
    }
    if (o.ok)
        o.detail = std::to_string(std::size(commands)) + " commands x {1,1,2,8} workers byte-identical";
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit_secs;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "counting corollary", 5, criterion1},
        {2, "tensor decomposition", 120, criterion2},
        {3, "(1,1,1,2) oracle", 10, criterion3},
        {4, "periodicity", 60, criterion4},
        {5, "lemma suite", 30, criterion5},
        {6, "SAGBI and minimality", 300, criterion6},
        {7, "relations", 60, criterion7},
        {8, "SL2 oracle", 300, criterion8},
        {9, "determinism", 600, criterion9},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_secs) {
            o.ok = false;
            o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_secs)) + " s limit)";
        }
        failed += !o.ok;
        std::printf("[%s] %d %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
        std::fflush(stdout);
    }

    // Stretch, not gating: p=5, m=3 within MODINV_BUDGET_SECS (default 120 s).
    SL2Options stretch;
    stretch.workers = kWorkers;
    stretch.budget_secs = std::getenv("MODINV_BUDGET_SECS") ? std::nullopt : std::optional<double>(120.0);
    auto start = std::chrono::steady_clock::now();
    try {
        auto r = minimal_generators_sl2(5, 3, 25, stretch);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[INFO] 8 stretch p=5 m=3 (%.2f s): Noether number %u (expected 24)\n", secs, r.noether_number);
    } catch (const Error& e) {
        std::printf("[INFO] 8 stretch p=5 m=3: %s: %s\n", errc_name(e.code()), e.what());
    }

    std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
