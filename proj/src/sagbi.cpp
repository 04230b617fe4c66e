#include "modinv/sagbi.hpp"

#include <algorithm>
#include <unordered_set>

#include "modinv/cpaction.hpp"

namespace modinv {

std::string to_string(GeneratorKind kind)
{
    switch (kind) {
    case GeneratorKind::Xi: return "x";
    case GeneratorKind::NormYi: return "N";
    case GeneratorKind::Uij: return "u";
    case GeneratorKind::TraceE: return "Tr";
    }
    return "?";
}

std::string to_string(Variant variant)
{
    return variant == Variant::Full ? "full" : "minimal";
}

std::string Generator::label() const
{
    switch (kind) {
    case GeneratorKind::Xi: return "x" + std::to_string(payload[0]);
    case GeneratorKind::NormYi: return "N(y" + std::to_string(payload[0]) + ")";
    case GeneratorKind::Uij: return "u" + std::to_string(payload[0]) + "_" + std::to_string(payload[1]);
    case GeneratorKind::TraceE: break;
    }
    std::string out = "Tr(y^(";
    for (std::size_t i = 0; i < payload.size(); ++i)
        out += (i ? "," : "") + std::to_string(payload[i]);
    return out + "))";
}

GeneratorSet GeneratorSet::without(std::size_t idx) const
{
    GeneratorSet out = *this;
    out.elements.erase(out.elements.begin() + static_cast<std::ptrdiff_t>(idx));
    return out;
}

namespace {

Polynomial y_power(std::uint32_t m, const PrimeField& F, const std::vector<std::uint32_t>& E)
{
    Monomial mon(m);
    for (std::uint32_t i = 1; i <= m; ++i)
        mon.set(var_index({i, VarKind::Y}), E[i - 1]);
    return Polynomial::monomial(mon, F);
}

Generator make(GeneratorKind kind, std::vector<std::uint32_t> payload, Polynomial poly)
{
    Monomial lead = poly.lead_monomial();
    return {kind, std::move(payload), std::move(poly), std::move(lead)};
}

// All E with 0 <= e_i <= caps[i], first coordinate most significant.
std::vector<std::vector<std::uint32_t>> exponent_vectors(const std::vector<std::uint32_t>& caps)
{
    std::vector<std::vector<std::uint32_t>> out;
    const std::size_t m = caps.size();
    std::vector<std::uint32_t> E(m, 0);
    for (;;) {
        out.push_back(E);
        std::size_t i = m;
        while (i > 0 && E[i - 1] == caps[i - 1])
            E[--i] = 0;
        if (i == 0)
            break;
        ++E[i - 1];
    }
    return out;
}

std::uint32_t weight(const std::vector<std::uint32_t>& E)
{
    std::uint32_t s = 0;
    for (auto e : E)
        s += e;
    return s;
}

}  // namespace

GeneratorSet build_generators(std::uint32_t p, std::uint32_t m, Variant variant, const std::optional<MultiDegree>& bound)
{
    if (m < 1)
        throw Error(Errc::InvalidArgument, "need at least one block");
    if (bound && bound->size() != m)
        throw Error(Errc::DimensionMismatch, "bound has the wrong number of blocks");
    auto fits = [&](std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> degs) {
        if (!bound)
            return true;
        for (auto [i, d] : degs)
            if ((*bound)[i - 1] < d)
                return false;
        return true;
    };
    PrimeField F(p);
    GeneratorSet gs;
    gs.p = p;
    gs.m = m;
    gs.variant = variant;
    for (std::uint32_t i = 1; i <= m; ++i)
        if (fits({{i, 1}}))
            gs.elements.push_back(make(GeneratorKind::Xi, {i}, Polynomial::x(m, F, i)));
    for (std::uint32_t i = 1; i <= m; ++i)
        if (fits({{i, p}}))
            gs.elements.push_back(make(GeneratorKind::NormYi, {i}, norm(m, F, i)));
    for (std::uint32_t i = 1; i <= m; ++i)
        for (std::uint32_t j = i + 1; j <= m; ++j)
            if (fits({{i, 1}, {j, 1}}))
                gs.elements.push_back(make(GeneratorKind::Uij, {i, j}, Polynomial::u(m, F, i, j)));
    std::vector<std::uint32_t> caps(m, p - 1);
    if (bound)
        for (std::uint32_t i = 0; i < m; ++i)
            caps[i] = std::min(caps[i], (*bound)[i]);
    for (const auto& E : exponent_vectors(caps)) {
        std::uint32_t w = weight(E);
        if (w < p - 1 || (variant == Variant::Minimal && w <= 2 * (p - 1)))
            continue;
        Polynomial tr = transfer(y_power(m, F, E));
        if (!tr.is_zero())
            gs.elements.push_back(make(GeneratorKind::TraceE, E, std::move(tr)));
    }
    return gs;
}

std::optional<Factorization> lm_factorizes(const Monomial& mon, const GeneratorSet& gens)
{
    // Leads in grevlex-descending order; duplicates keep the first generator.
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < gens.elements.size(); ++k)
        order.push_back(k);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return GrevlexGreater{}(gens.elements[a].lead, gens.elements[b].lead);
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](std::size_t a, std::size_t b) { return gens.elements[a].lead == gens.elements[b].lead; }),
                order.end());

    std::unordered_set<Monomial, MonomialHash> dead;
    std::vector<std::size_t> chosen;
    // Every factorization must use a lead containing the first variable that
    // occurs in the remaining monomial.
    auto rec = [&](auto&& self, const Monomial& rest) -> bool {
        if (rest.is_one())
            return true;
        if (dead.count(rest))
            return false;
        auto exps = rest.exponents();
        std::size_t v = 0;
        while (exps[v] == 0)
            ++v;
        for (auto k : order) {
            const Monomial& lead = gens.elements[k].lead;
            if (lead.is_one() || lead[v] == 0 || !lead.divides(rest))
                continue;
            chosen.push_back(k);
            if (self(self, lead.cofactor(rest)))
                return true;
            chosen.pop_back();
        }
        dead.insert(rest);
        return false;
    };
    if (!rec(rec, mon))
        return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    Factorization out;
    for (auto k : chosen) {
        if (!out.empty() && out.back().first == k)
            ++out.back().second;
        else
            out.push_back({k, 1});
    }
    return out;
}

SagbiReport sagbi_verify(const MultiDegree& lambda, const GeneratorSet& gens)
{
    if (lambda.size() != gens.m)
        throw Error(Errc::DimensionMismatch, "multidegree and generator set disagree on m");
    PrimeField F(gens.p);
    SagbiReport rep;
    rep.lambda = lambda;
    rep.p = gens.p;
    for (const auto& f : invariant_basis(lambda, F)) {
        ++rep.checked;
        if (!lm_factorizes(f.lead_monomial(), gens))
            rep.failures.push_back(f.lead_monomial());
    }
    return rep;
}

Polynomial evaluate(const Factorization& factors, const GeneratorSet& gens)
{
    PrimeField F(gens.p);
    Polynomial out = Polynomial::constant(gens.m, F, 1);
    for (const auto& [k, e] : factors)
        out *= gens.elements.at(k).poly.pow(e);
    return out;
}

SubductionResult subduct(const Polynomial& f, const GeneratorSet& gens)
{
    if (!is_invariant(f))
        throw Error(Errc::NotInvariant, "subduction needs an invariant");
    const PrimeField& F = f.field();
    SubductionResult res{{}, f};
    while (!res.remainder.is_zero()) {
        auto fac = lm_factorizes(res.remainder.lead_monomial(), gens);
        if (!fac)
            break;
        Polynomial q = evaluate(*fac, gens);
        Coeff c = F.div(res.remainder.lead().coeff, q.lead().coeff);
        res.remainder -= q.scaled(c);
        res.expression.push_back({c, std::move(*fac)});
    }
    return res;
}

MinimalityReport minimality_report(std::uint32_t p, std::uint32_t m)
{
    MinimalityReport rep;
    rep.p = p;
    rep.m = m;
    GeneratorSet minimal = build_generators(p, m, Variant::Minimal);
    for (std::size_t k = 0; k < minimal.elements.size(); ++k) {
        ++rep.generators_checked;
        auto res = subduct(minimal.elements[k].poly, minimal.without(k));
        if (res.remainder.is_zero())
            rep.redundant.push_back(minimal.elements[k].label());
    }
    PrimeField F(p);
    for (const auto& E : exponent_vectors(std::vector<std::uint32_t>(m, p - 1))) {
        std::uint32_t w = weight(E);
        if (w < p - 1 || w > 2 * (p - 1))
            continue;
        ++rep.transfers_checked;
        Generator g = make(GeneratorKind::TraceE, E, transfer(y_power(m, F, E)));
        if (!subduct(g.poly, minimal).remainder.is_zero())
            rep.unreduced_transfers.push_back(g.label());
    }
    return rep;
}

}  // namespace modinv
