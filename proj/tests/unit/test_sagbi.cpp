#include <algorithm>

#include "../support.hpp"
#include "modinv/cpaction.hpp"
#include "modinv/sagbi.hpp"
#include "modinv/sl2.hpp"

using namespace modinv;

namespace {

std::vector<std::string> labels(const GeneratorSet& g)
{
    std::vector<std::string> out;
    for (const auto& e : g.elements)
        out.push_back(e.label());
    return out;
}

std::size_t index_of(const GeneratorSet& g, const std::string& label)
{
    for (std::size_t i = 0; i < g.elements.size(); ++i)
        if (g.elements[i].label() == label)
            return i;
    FAIL("missing generator " << label);
    return 0;
}

}  // namespace

TEST_CASE("build_generators examples")
{
    CHECK(labels(build_generators(2, 1, Variant::Minimal)) == std::vector<std::string>{"x1", "N(y1)"});
    CHECK(labels(build_generators(3, 2, Variant::Minimal)) ==
          std::vector<std::string>{"x1", "x2", "N(y1)", "N(y2)", "u1_2"});
    auto b3 = build_generators(3, 3, Variant::Minimal);
    std::vector<std::string> transfers;
    for (const auto& g : b3.elements)
        if (g.kind == GeneratorKind::TraceE)
            transfers.push_back(g.label());
    CHECK(transfers == std::vector<std::string>{"Tr(y^(1,2,2))", "Tr(y^(2,1,2))", "Tr(y^(2,2,1))", "Tr(y^(2,2,2))"});
    // the full set keeps the nonzero transfers with |E| >= p-1
    auto full = build_generators(3, 2, Variant::Full);
    CHECK(std::count_if(full.elements.begin(), full.elements.end(),
                        [](const Generator& g) { return g.kind == GeneratorKind::TraceE; }) == 6);
    CHECK_ERRC(build_generators(4, 2, Variant::Full), Errc::NotPrime);
}

TEST_CASE("lm_factorizes examples")
{
    auto gens = build_generators(5, 2, Variant::Minimal);
    auto f = lm_factorizes(Monomial({0, 1, 1, 0}), gens);
    REQUIRE(f);
    CHECK(*f == Factorization{{index_of(gens, "u1_2"), 1}});
    CHECK(!lm_factorizes(Monomial({1, 0, 0, 0}), gens));

    // LM(Tr(y^E)) for |E| <= 2(p-1) factors into x's and u-leads
    PrimeField F5(5);
    auto g3 = build_generators(5, 3, Variant::Minimal);
    for (std::vector<std::uint32_t> e : {std::vector<std::uint32_t>{4, 0, 0}, {2, 2, 0}, {3, 3, 2}, {4, 4, 0}, {1, 3, 4}}) {
        std::vector<std::uint32_t> exps(6, 0);
        for (std::size_t i = 0; i < 3; ++i)
            exps[2 * i] = e[i];
        Polynomial tr = transfer(Polynomial::monomial(Monomial(exps), F5));
        REQUIRE(!tr.is_zero());
        auto fac = lm_factorizes(tr.lead_monomial(), g3);
        REQUIRE(fac);
        for (auto [idx, k] : *fac)
            CHECK(g3.elements[idx].kind != GeneratorKind::TraceE);
    }
}

TEST_CASE("sagbi_verify examples")
{
    for (std::uint32_t d = 1; d <= 6; ++d) {
        auto rep = sagbi_verify(MultiDegree(d, 1), build_generators(5, d, Variant::Full, MultiDegree(d, 1)));
        CHECK(rep.passed());
        CHECK(rep.checked > 0);
    }
    auto r1 = sagbi_verify({3}, build_generators(3, 1, Variant::Minimal));
    CHECK(r1.passed());
    CHECK(r1.checked == 2);
    CHECK(sagbi_verify({2, 1}, build_generators(3, 2, Variant::Minimal)).passed());
}

TEST_CASE("subduct examples")
{
    PrimeField F3(3), F5(5);
    auto g2 = build_generators(5, 2, Variant::Minimal);
    auto r = subduct(Polynomial::u(2, F5, 1, 2), g2);
    CHECK(r.remainder.is_zero());
    REQUIRE(r.expression.size() == 1);
    CHECK(r.expression[0].factors == Factorization{{index_of(g2, "u1_2"), 1}});
    CHECK(evaluate(r.expression[0].factors, g2) == Polynomial::u(2, F5, 1, 2));

    auto g3 = build_generators(3, 3, Variant::Minimal);
    Polynomial t = transfer(Polynomial::y(3, F3, 1) * Polynomial::y(3, F3, 2) * Polynomial::y(3, F3, 3));
    CHECK(subduct(t, g3).remainder.is_zero());

    std::size_t k = index_of(g3, "Tr(y^(2,2,1))");
    CHECK(!subduct(g3.elements[k].poly, g3.without(k)).remainder.is_zero());
    CHECK_ERRC(subduct(Polynomial::y(3, F3, 1), g3), Errc::NotInvariant);
}

TEST_CASE("minimality_report examples")
{
    auto r = minimality_report(3, 3);
    CHECK(r.passed());
    CHECK(r.generators_checked == 13);
    auto r2 = minimality_report(2, 2);
    CHECK(r2.passed());
    CHECK(r2.generators_checked == 5);
    auto r1 = minimality_report(3, 1);
    CHECK(r1.passed());
    CHECK(r1.generators_checked == 2);
}

TEST_CASE("property: SAGBI and subduction over all small multidegrees")
{
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField F(p);
        for (std::uint32_t m = 1; m <= 3; ++m) {
            for (std::uint32_t d = 1; d <= 6; ++d) {
                for (const auto& lam : compositions(d, m)) {
                    auto minimal = build_generators(p, m, Variant::Minimal, lam);
                    auto full = build_generators(p, m, Variant::Full, lam);
                    bool a = sagbi_verify(lam, minimal).passed();
                    CHECK(a == sagbi_verify(lam, full).passed());
                    CHECK(a);
                    for (const auto& f : invariant_basis(lam, F))
                        CHECK(subduct(f, minimal).remainder.is_zero());
                }
            }
        }
    }
}

TEST_CASE("property: low transfers reduce, high transfers are indispensable")
{
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField F(p);
        for (std::uint32_t m = 1; m <= 3; ++m) {
            auto minimal = build_generators(p, m, Variant::Minimal);
            auto full = build_generators(p, m, Variant::Full);
            for (const auto& g : full.elements) {
                if (g.kind != GeneratorKind::TraceE)
                    continue;
                std::uint32_t size = 0;
                for (auto e : g.payload)
                    size += e;
                if (size <= 2 * (p - 1)) {
                    CHECK(subduct(g.poly, minimal).remainder.is_zero());
                } else {
                    std::size_t k = index_of(minimal, g.label());
                    CHECK(!subduct(g.poly, minimal.without(k)).remainder.is_zero());
                }
            }
        }
    }
}
