#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "modinv/component.hpp"
#include "modinv/cpaction.hpp"
#include "modinv/paths.hpp"
#include "modinv/polarize.hpp"
#include "modinv/reports.hpp"
#include "modinv/sagbi.hpp"
#include "modinv/sl2.hpp"
#include "modinv/straighten.hpp"

namespace modinv {

namespace {

struct Check {
    std::string name;
    std::function<bool()> run;
};

std::map<std::uint32_t, std::uint64_t> expected_1112(std::uint32_t p)
{
    switch (p) {
    case 7: return {{2, 3}, {4, 3}, {6, 1}};
    case 5: return {{2, 3}, {4, 2}, {5, 2}};
    case 3: return {{3, 8}};
    default: return {{2, 12}};
    }
}

bool periodicity_holds(std::uint32_t p)
{
    PrimeField F(p);
    MultiDegree lam{p + 1, 1, 1, p + 2};
    PeriodicityResult red = periodicity_reduce(lam, p);
    if (red.reduced != MultiDegree{1, 1, 1, 2} || red.projective_count != 4 * p + 20)
        return false;
    ModuleDecomposition big = decompose_component(lam, F);
    ModuleDecomposition small = decompose_component(red.reduced, F);
    small.multiplicities[p - 1] += red.projective_count;
    return big == small;
}

bool transfer_lead_sign(std::uint32_t p)
{
    PrimeField F(p);
    Polynomial y = Polynomial::y(1, F, 1).pow(p - 1);
    Polynomial x = Polynomial::x(1, F, 1).pow(p - 1);
    return transfer(y) == -x;
}

bool sl2_noether(std::uint32_t p, std::uint32_t m, std::uint32_t d_max, std::uint32_t expected)
{
    return minimal_generators_sl2(p, m, d_max).noether_number == expected;
}

Polynomial random_multihomogeneous(std::mt19937_64& rng, const PrimeField& F, std::size_t m)
{
    std::uniform_int_distribution<std::uint32_t> part(0, F.p() - 1);
    MultiDegree lam(m);
    for (auto& l : lam)
        l = part(rng);
    Component comp(lam);
    std::vector<Coeff> v(comp.dim());
    std::uniform_int_distribution<Coeff> coeff(0, F.p() - 1);
    for (auto& c : v)
        c = coeff(rng);
    return comp.from_dense(v, F);
}

bool restitution_scales(const Polynomial& f)
{
    if (f.is_zero())
        return true;
    const PrimeField& F = f.field();
    MultiDegree lam = f.multidegree();
    Coeff scale = 1 % F.p();
    for (auto l : lam)
        for (std::uint32_t k = 2; k <= l; ++k)
            scale = F.mul(scale, F.reduce(k));
    return restitute(polarize_full(f, lam), BlockSplit(lam)) == f.scaled(scale);
}

bool sigma_power_property(std::mt19937_64& rng)
{
    const std::uint32_t primes[] = {3, 5, 7, 11};
    for (int trial = 0; trial < 50; ++trial) {
        PrimeField F(primes[rng() % 4]);
        const std::size_t m = 1 + rng() % 6;
        Polynomial yE = Polynomial::constant(m, F, 1), xE = Polynomial::constant(m, F, 1);
        std::uint32_t size = 0;
        for (std::size_t i = 1; i <= m && size + 1 < F.p(); ++i) {
            if (rng() % 2) {
                yE *= Polynomial::y(m, F, i);
                xE *= Polynomial::x(m, F, i);
                ++size;
            }
        }
        Polynomial f = yE;
        for (std::uint32_t k = 0; k < size; ++k)
            f = apply_sigma(f) - f;
        Coeff fact = 1;
        for (std::uint32_t k = 2; k <= size; ++k)
            fact = F.mul(fact, k);
        if (f != xE.scaled(fact))
            return false;
    }
    return true;
}

bool power_sum_property()
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        PrimeField F(p);
        for (std::uint64_t t = 1; t <= 3 * (p - 1); ++t) {
            Coeff brute = 0;
            for (Coeff i = 0; i < p; ++i)
                brute = F.add(brute, F.pow(i, t));
            if (power_sum(t, F) != brute)
                return false;
        }
    }
    return true;
}

bool uncross_property(std::mt19937_64& rng)
{
    PrimeField F(7);
    int done = 0;
    while (done < 100) {
        const std::uint32_t m = 4 + rng() % 3;
        UProduct P;
        P.x_exp.assign(m, 0);
        for (std::uint32_t i = 0; i < m; ++i)
            P.x_exp[i] = rng() % 2;
        const int edges = 2 + rng() % 3;
        for (int e = 0; e < edges; ++e) {
            std::uint32_t i = 1 + rng() % m, j = 1 + rng() % m;
            if (i == j)
                continue;
            if (i > j)
                std::swap(i, j);
            P.add_edge(i, j);
        }
        if (P.is_crossing_free())
            continue;
        Polynomial sum(m, F);
        for (const auto& t : uncross(P)) {
            if (!t.product.is_crossing_free())
                return false;
            sum += t.product.expand(F).scaled(F.reduce(t.coeff));
        }
        if (sum != P.expand(F))
            return false;
        ++done;
    }
    return true;
}

std::vector<Check> quick_checks()
{
    std::vector<Check> out;
    for (std::uint32_t p : {7u, 5u, 3u, 2u}) {
        out.push_back({"decompose_1112_p" + std::to_string(p), [p] {
                           return decompose_component({1, 1, 1, 2}, PrimeField(p)).nonzero() == expected_1112(p);
                       }});
        out.push_back({"decompose_1112_paths_p" + std::to_string(p), [p] {
                           return decompose_via_paths({1, 1, 1, 2}, PrimeField(p)).nonzero() == expected_1112(p);
                       }});
    }
    out.push_back({"mu_3_4_equals_5", [] { return count_tables(4, 3).mu[4][2] == 5; }});
    out.push_back({"counting_corollary", [] {
                       for (std::uint32_t p : {2u, 3u, 5u, 7u})
                           if (!report_passed(counts_report(p, 12)))
                               return false;
                       return true;
                   }});
    out.push_back({"tensor_dimension_sum", [] {
                       for (std::uint32_t p : {2u, 3u, 5u, 7u})
                           for (std::uint32_t d = 0; d <= 8; ++d) {
                               std::uint64_t total = 0;
                               for (const auto& s : tensor_decompose(d, p))
                                   total += s.dimension;
                               if (total != (std::uint64_t{1} << d))
                                   return false;
                           }
                       return true;
                   }});
    out.push_back({"transfer_lead_sign", [] {
                       for (std::uint32_t p : {2u, 3u, 5u, 7u})
                           if (!transfer_lead_sign(p))
                               return false;
                       return true;
                   }});
    out.push_back({"transfer_y1y2y3_p3", [] {
                       PrimeField F(3);
                       Polynomial t = transfer(Polynomial::y(3, F, 1) * Polynomial::y(3, F, 2) * Polynomial::y(3, F, 3));
                       Polynomial rhs = Polynomial::x(3, F, 3) * Polynomial::u(3, F, 1, 2) -
                                        Polynomial::x(3, F, 1) * Polynomial::u(3, F, 2, 3);
                       return t == rhs;
                   }});
    out.push_back({"norm_formula", [] {
                       for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
                           PrimeField F(p);
                           Polynomial x = Polynomial::x(1, F, 1), y = Polynomial::y(1, F, 1);
                           if (norm(1, F, 1) != y.pow(p) - x.pow(p - 1) * y)
                               return false;
                       }
                       return true;
                   }});
    out.push_back({"u12_invariant", [] {
                       for (std::uint32_t p : {2u, 3u, 5u, 7u})
                           if (!is_invariant(Polynomial::u(2, PrimeField(p), 1, 2)))
                               return false;
                       return true;
                   }});
    out.push_back({"periodicity_p3", [] { return periodicity_holds(3); }});
    out.push_back({"uncross_x5_u13_u24", [] {
                       UProduct P;
                       P.x_exp = {0, 0, 0, 0, 1};
                       P.add_edge(1, 3);
                       P.add_edge(2, 4);
                       auto terms = uncross(P);
                       if (terms.size() != 2)
                           return false;
                       PrimeField F(5);
                       Polynomial sum(5, F);
                       for (const auto& t : terms)
                           sum += t.product.expand(F).scaled(F.reduce(t.coeff));
                       return sum == P.expand(F) && kempe_measure(terms[0].product) < kempe_measure(P) &&
                              kempe_measure(terms[1].product) < kempe_measure(P);
                   }});
    out.push_back({"relations_m4", [] {
                       for (std::uint32_t p : {2u, 3u, 5u, 7u})
                           verify_relations(4, PrimeField(p));
                       return true;
                   }});
    out.push_back({"restitution_scalar", [] {
                       PrimeField F(7);
                       Polynomial f = Polynomial::parse("x1^2*y2 + 3*x1*y1*x2 - y1^2*y2", 2, F);
                       return restitution_scales(f);
                   }});
    out.push_back({"minimal_set_p3_m3", [] {
                       GeneratorSet b = build_generators(3, 3, Variant::Minimal);
                       std::size_t transfers = 0;
                       for (const auto& g : b.elements)
                           transfers += g.kind == GeneratorKind::TraceE;
                       return transfers == 4 && minimality_report(3, 3).passed();
                   }});
    out.push_back({"sl2_p2_m2_noether_3", [] { return sl2_noether(2, 2, 4, 3); }});
    out.push_back({"sl2_p2_m3_noether_3", [] { return sl2_noether(2, 3, 4, 3); }});
    out.push_back({"sl2_p3_m1_dickson_degrees", [] {
                       auto rep = minimal_generators_sl2(3, 1, 6);
                       return rep.per_degree == std::map<std::uint32_t, std::uint64_t>{{4, 1}, {6, 1}};
                   }});
    out.push_back({"sl2_lemmas", [] {
                       for (std::uint32_t p : {2u, 3u, 5u})
                           for (std::uint32_t m = 1; m <= 3; ++m)
                               if (!lemma_L_holds(PrimeField(p), m) || !lemma_D_holds(PrimeField(p), m))
                                   return false;
                       return true;
                   }});
    return out;
}

std::vector<Check> full_checks(std::uint64_t seed)
{
    std::vector<Check> out;
    out.push_back({"periodicity_p5", [] { return periodicity_holds(5); }});
    out.push_back({"periodicity_p7", [] { return periodicity_holds(7); }});
    out.push_back({"property_power_sum", [] { return power_sum_property(); }});
    out.push_back({"property_sigma_power", [seed] {
                       std::mt19937_64 rng(seed);
                       return sigma_power_property(rng);
                   }});
    out.push_back({"property_restitution", [seed] {
                       std::mt19937_64 rng(seed + 1);
                       const std::uint32_t primes[] = {3, 5, 7};
                       for (int trial = 0; trial < 50; ++trial) {
                           PrimeField F(primes[rng() % 3]);
                           if (!restitution_scales(random_multihomogeneous(rng, F, 1 + rng() % 3)))
                               return false;
                       }
                       return true;
                   }});
    out.push_back({"property_uncross", [seed] {
                       std::mt19937_64 rng(seed + 2);
                       return uncross_property(rng);
                   }});
    out.push_back({"tensor_theta_checks", [] {
                       for (std::uint32_t p : {2u, 3u, 5u, 7u})
                           if (!report_passed(tensor_report(p, 6)))
                               return false;
                       return true;
                   }});
    out.push_back({"sagbi_sweep", [] {
                       for (std::uint32_t p : {2u, 3u})
                           for (std::uint32_t m = 1; m <= 3; ++m)
                               if (!report_passed(sagbi_report(p, m, 6, Variant::Minimal)))
                                   return false;
                       return true;
                   }});
    out.push_back({"sl2_p3_m3_28_generators", [] {
                       auto rep = minimal_generators_sl2(3, 3, 9);
                       return rep.total == 28 && rep.noether_number == 8 &&
                              rep.per_degree == std::map<std::uint32_t, std::uint64_t>{{2, 3}, {4, 9}, {6, 7}, {8, 9}};
                   }});
    return out;
}

}  // namespace

Json selftest_report(SelftestLevel level, std::uint64_t seed)
{
    std::vector<Check> checks = quick_checks();
    if (level == SelftestLevel::Full)
        for (auto& c : full_checks(seed))
            checks.push_back(std::move(c));

    Json rows = Json::array();
    Json failed = Json::array();
    for (const auto& c : checks) {
        bool ok = false;
        std::string error;
        try {
            ok = c.run();
        } catch (const Error& e) {
            error = std::string(errc_name(e.code())) + ": " + e.what();
        } catch (const std::exception& e) {
            error = e.what();
        }
        Json row;
        row["name"] = c.name;
        row["passed"] = ok;
        if (!error.empty())
            row["error"] = error;
        rows.push_back(std::move(row));
        if (!ok)
            failed.push_back(c.name);
    }
    Json out;
    out["level"] = level == SelftestLevel::Quick ? "quick" : "full";
    out["seed"] = seed;
    out["checks"] = std::move(rows);
    out["executed"] = checks.size();
    out["failed"] = failed;
    out["passed"] = failed.empty();
    return out;
}

}  // namespace modinv
