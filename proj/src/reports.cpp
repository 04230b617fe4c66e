#include "modinv/reports.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "modinv/component.hpp"
#include "modinv/cpaction.hpp"
#include "modinv/parallel.hpp"
#include "modinv/paths.hpp"
#include "modinv/polarize.hpp"

namespace modinv {

namespace {

Json summands_json(const ModuleDecomposition& dec)
{
    Json out = Json::object();
    for (const auto& [dim, count] : dec.nonzero())
        out[std::to_string(dim)] = count;
    return out;
}

Json multidegree_json(const MultiDegree& lambda)
{
    Json out = Json::array();
    for (auto v : lambda)
        out.push_back(v);
    return out;
}

void require_prime(std::uint32_t p)
{
    PrimeField check(p);
    (void)check;
}

}  // namespace

Json counts_report(std::uint32_t p, std::uint32_t d_max)
{
    require_prime(p);
    if (d_max > 60)
        throw Error(Errc::InfeasibleSize, "dmax above 60 overflows the count tables");
    CountTables t = count_tables(d_max, p);
    const std::uint32_t brute_max = std::min<std::uint32_t>(d_max, 20);

    bool brute_ok = true;
    for (std::uint32_t d = 0; d <= brute_max; ++d) {
        PathTally tally = tally_paths(d, p);
        brute_ok = brute_ok && tally.idp == t.nu_bar[d];
        for (std::uint32_t h = 0; h + 2 <= p; ++h)
            brute_ok = brute_ok && tally.pdp[h] == t.nu[d][h];
    }
    bool corollary = true;
    for (std::uint32_t d = 0; d <= d_max; ++d) {
        for (std::uint32_t h = 1; h < p; ++h)
            corollary = corollary && t.mu[d][h - 1] == t.nu[d][h - 1];
        corollary = corollary && t.mu[d][p - 1] == t.nu_bar[d];
    }

    Json out;
    out["p"] = p;
    out["dmax"] = d_max;
    out["mu"] = t.mu;
    out["nu"] = t.nu;
    out["nu_bar"] = t.nu_bar;
    out["brute_force_dmax"] = brute_max;
    out["brute_force_agrees"] = brute_ok;
    out["corollary_holds"] = corollary;
    out["passed"] = brute_ok && corollary;
    return out;
}

Json paths_report(std::uint32_t p, std::uint32_t d)
{
    require_prime(p);
    if (d > 20)
        throw Error(Errc::InfeasibleSize, "path listings are limited to d <= 20");
    Json paths = Json::array();
    std::uint64_t total = 0;
    for (const auto& cp : enumerate_paths(d, p)) {
        Json row;
        row["word"] = cp.path.word();
        row["class"] = cp.cls.to_string();
        row["dimension"] = cp.cls.summand_dimension(p);
        row["lambda"] = lambda_monomial(cp.path).to_string();
        total += cp.cls.summand_dimension(p);
        paths.push_back(std::move(row));
    }
    PathTally tally = tally_paths(d, p);
    Json out;
    out["p"] = p;
    out["d"] = d;
    out["paths"] = std::move(paths);
    out["tally"] = {{"pdp", tally.pdp}, {"idp", tally.idp}, {"neither", tally.neither}};
    out["total_dimension"] = total;
    out["passed"] = total == (std::uint64_t{1} << d);
    return out;
}

Json tensor_report(std::uint32_t p, std::uint32_t d, unsigned workers)
{
    PrimeField field(p);
    if (d > 20)
        throw Error(Errc::InfeasibleSize, "tensor decompositions are limited to d <= 20");
    auto summands = tensor_decompose(d, p);
    ModuleDecomposition dec{p, std::vector<std::uint64_t>(p, 0)};
    for (const auto& s : summands)
        dec.multiplicities[s.dimension - 1] += 1;

    Json out;
    out["p"] = p;
    out["d"] = d;
    out["summands"] = summands_json(dec);
    out["dimension"] = dec.dimension();
    bool passed = dec.dimension() == (std::uint64_t{1} << d);

    Json checks;
    if (d >= 1 && d <= 8) {
        MultiDegree ones(d, 1);
        SigmaFiltration filt(ones, field);
        const Component& comp = filt.component();
        struct Verdict {
            bool invariant, lead, length;
            std::size_t lead_index;
        };
        auto verdicts = parallel_map(summands, workers, [&](const TensorSummand& s) {
            Polynomial th = theta(s.path, field);
            Verdict v{is_invariant(th), false, false, comp.dim()};
            if (th.is_zero())
                return v;
            v.lead = th.lead_monomial() == lambda_monomial(s.path);
            v.lead_index = comp.index(th.lead_monomial());
            v.length = v.invariant && filt.length(comp.to_dense(th)) == s.dimension;
            return v;
        });
        std::vector<std::size_t> images;
        bool inv = true, lead = true, len = true;
        for (const auto& v : verdicts) {
            inv = inv && v.invariant;
            lead = lead && v.lead;
            len = len && v.length;
            images.push_back(v.lead_index);
        }
        std::vector<std::size_t> leads;
        for (const auto& b : invariant_basis(ones, field))
            leads.push_back(comp.index(b.lead_monomial()));
        std::sort(images.begin(), images.end());
        std::sort(leads.begin(), leads.end());
        bool image = images == leads;
        checks["theta_invariant"] = inv;
        checks["lead_is_lambda"] = lead;
        checks["length_matches"] = len;
        checks["lambda_image_is_lead_set"] = image;
        passed = passed && inv && lead && len && image;
    }
    out["checks"] = std::move(checks);
    out["passed"] = passed;
    return out;
}

Json decompose_report(std::uint32_t p, const MultiDegree& lambda, DecomposeMethod method)
{
    PrimeField field(p);
    if (lambda.empty())
        throw Error(Errc::InvalidArgument, "multidegree must have at least one block");
    Json out;
    out["p"] = p;
    out["multidegree"] = multidegree_json(lambda);
    switch (method) {
    case DecomposeMethod::Ranks:
        out["summands"] = summands_json(decompose_component(lambda, field));
        break;
    case DecomposeMethod::Paths:
        out["summands"] = summands_json(decompose_via_paths(lambda, field));
        break;
    case DecomposeMethod::Both: {
        ModuleDecomposition ranks = decompose_component(lambda, field);
        ModuleDecomposition paths = decompose_via_paths(lambda, field);
        out["summands"] = summands_json(ranks);
        out["paths_summands"] = summands_json(paths);
        out["agreement"] = ranks == paths;
        out["passed"] = ranks == paths;
        break;
    }
    }
    return out;
}

Json sagbi_report(std::uint32_t p, std::uint32_t m, std::uint32_t d_max, Variant variant, unsigned workers)
{
    PrimeField field(p);
    if (m == 0)
        throw Error(Errc::InvalidArgument, "m must be at least 1");
    std::vector<MultiDegree> lambdas;
    for (std::uint32_t d = 1; d <= d_max; ++d)
        for (auto& lam : compositions(d, m))
            lambdas.push_back(std::move(lam));

    GeneratorSet listing = build_generators(p, m, variant, MultiDegree(m, d_max));
    Json labels = Json::array();
    for (const auto& g : listing.elements)
        labels.push_back(g.label());

    auto rows = parallel_map(lambdas, workers, [&](const MultiDegree& lam) {
        GeneratorSet gens = build_generators(p, m, variant, lam);
        SagbiReport rep = sagbi_verify(lam, gens);
        std::size_t sub_fail = 0;
        for (const auto& f : invariant_basis(lam, field))
            if (!subduct(f, gens).remainder.is_zero())
                ++sub_fail;
        Json row;
        row["multidegree"] = multidegree_json(lam);
        row["invariants"] = rep.checked;
        Json fails = Json::array();
        for (const auto& mon : rep.failures)
            fails.push_back(mon.to_string());
        row["lead_failures"] = std::move(fails);
        row["subduction_failures"] = sub_fail;
        return row;
    });

    bool passed = true;
    std::size_t invariants = 0;
    for (const auto& r : rows) {
        invariants += r["invariants"].get<std::size_t>();
        passed = passed && r["lead_failures"].empty() && r["subduction_failures"] == 0;
    }

    Json out;
    out["p"] = p;
    out["m"] = m;
    out["dmax"] = d_max;
    out["variant"] = to_string(variant);
    out["generators"] = std::move(labels);
    out["multidegrees_checked"] = rows.size();
    out["invariants_checked"] = invariants;
    out["multidegrees"] = std::move(rows);
    if (variant == Variant::Minimal) {
        MinimalityReport mr = minimality_report(p, m);
        out["minimality"] = {{"generators_checked", mr.generators_checked},
                             {"redundant", mr.redundant},
                             {"transfers_checked", mr.transfers_checked},
                             {"unreduced_transfers", mr.unreduced_transfers},
                             {"passed", mr.passed()}};
        passed = passed && mr.passed();
    } else {
        out["minimality"] = nullptr;
    }
    out["passed"] = passed;
    return out;
}

namespace {

// Exact Noether numbers from the corollary, where it gives one.
std::optional<std::uint32_t> exact_noether(std::uint32_t p, std::uint32_t m)
{
    if (m == 2)
        return p == 2 ? 3u : p * (p - 1);
    if (m == 1)
        return std::max(p + 1, p * (p - 1));
    return std::nullopt;
}

}  // namespace

Json sl2_report(std::uint32_t p, std::uint32_t m, std::uint32_t d_max, const SL2Options& opts, bool membership)
{
    PrimeField field(p);
    SL2GeneratorReport rep = minimal_generators_sl2(p, m, d_max, opts);

    Json per_degree = Json::object();
    for (const auto& [deg, count] : rep.per_degree)
        per_degree[std::to_string(deg)] = count;
    Json per_md = Json::array();
    for (const auto& [lam, count] : rep.per_multidegree)
        per_md.push_back({{"multidegree", multidegree_json(lam)}, {"count", count}});

    auto exact = exact_noether(p, m);
    std::uint32_t target = exact ? *exact : rep.bound;
    bool complete = d_max >= target;
    bool holds;
    if (exact)
        holds = complete ? rep.noether_number == *exact : rep.noether_number <= d_max;
    else
        holds = rep.noether_number <= rep.bound;

    Json out;
    out["p"] = p;
    out["m"] = m;
    out["dmax"] = d_max;
    out["generators"] = rep.total;
    out["per_degree"] = std::move(per_degree);
    out["per_multidegree"] = std::move(per_md);
    out["noether_number"] = rep.noether_number;
    out["bound"] = rep.bound;
    if (exact)
        out["expected_noether_number"] = *exact;
    else
        out["expected_noether_number"] = nullptr;
    out["complete"] = complete;
    out["corollary_holds"] = holds;
    out["sm_size"] = rep.sm_size;
    bool passed = holds;
    if (membership) {
        MembershipReport mr = verify_sm_membership(p, m, d_max, opts);
        Json fails = Json::array();
        for (const auto& lam : mr.failures)
            fails.push_back(multidegree_json(lam));
        out["membership"] = {{"multidegrees_checked", mr.multidegrees_checked},
                             {"failures", std::move(fails)},
                             {"passed", mr.passed()}};
        passed = passed && mr.passed();
    } else {
        out["membership"] = nullptr;
    }
    out["passed"] = passed;
    return out;
}

bool report_passed(const Json& report)
{
    auto it = report.find("passed");
    return it == report.end() || (it->is_boolean() && it->get<bool>());
}

}  // namespace modinv
