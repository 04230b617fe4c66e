#include <algorithm>
#include <random>
#include <set>

#include "../support.hpp"
#include "modinv/component.hpp"
#include "modinv/polyring.hpp"

using namespace modinv;
using modinv::test::kSeed;
using modinv::test::parse;

namespace {

Monomial mono(std::vector<std::uint32_t> e)
{
    return Monomial(std::move(e));
}

}  // namespace

TEST_CASE("grevlex examples")
{
    // layout (y1, x1, y2, x2)
    Monomial y1 = mono({1, 0, 0, 0}), x1 = mono({0, 1, 0, 0});
    CHECK(grevlex_cmp(y1, x1) == std::strong_ordering::greater);
    CHECK(grevlex_cmp(mono({0, 1, 1, 0}), mono({1, 0, 0, 1})) == std::strong_ordering::greater);
    CHECK(grevlex_cmp(mono({0, 2, 0, 0}), y1) == std::strong_ordering::greater);
    CHECK(grevlex_cmp(y1, y1) == std::strong_ordering::equal);
    CHECK_ERRC(grevlex_cmp(Monomial(1), Monomial(2)), Errc::DimensionMismatch);
}

TEST_CASE("arithmetic examples")
{
    PrimeField F2(2), F5(5);
    CHECK(parse("x1 + y1", 1, 5) - parse("y1", 1, 5) == parse("x1", 1, 5));
    Polynomial u = Polynomial::u(2, F2, 1, 2);
    CHECK((u * u).to_string() == "x1^2*y2^2 + x2^2*y1^2");
    CHECK((u * Polynomial(2, F2)).is_zero());
    CHECK_ERRC(Polynomial::u(2, F2, 1, 2) + Polynomial::u(2, F5, 1, 2), Errc::ModulusMismatch);
    CHECK_ERRC(Polynomial::u(2, F5, 1, 2) + Polynomial::u(3, F5, 1, 2), Errc::DimensionMismatch);
}

TEST_CASE("lead examples")
{
    PrimeField F5(5);
    Polynomial u = Polynomial::u(2, F5, 1, 2);
    CHECK(u.lead().monomial == mono({0, 1, 1, 0}));
    CHECK(u.lead().coeff == 1);
    CHECK(Polynomial::x(1, F5, 1).lead_monomial() == mono({0, 1}));
    CHECK_ERRC(Polynomial(1, F5).lead(), Errc::ZeroPolynomial);
}

TEST_CASE("canonical text round-trips")
{
    PrimeField F5(5);
    CHECK(Polynomial::u(2, F5, 1, 2).to_string() == "x1*y2 - x2*y1");
    CHECK(Polynomial(2, F5).to_string() == "0");
    CHECK(parse("3*x1^2*y2 - 2 + y1", 2, 5).to_string() == "-2*x1^2*y2 + y1 - 2");
    CHECK(parse("y2*x1 - y1*x2", 2, 5) == Polynomial::u(2, F5, 1, 2));
    CHECK_ERRC(parse("x3", 2, 5), Errc::Parse);
    CHECK_ERRC(parse("x1 +", 2, 5), Errc::Parse);
    CHECK_ERRC(parse("z1", 2, 5), Errc::Parse);
}

TEST_CASE("multidegree parsing and projection")
{
    CHECK(parse_multidegree("1,1,1,2") == MultiDegree{1, 1, 1, 2});
    CHECK_ERRC(parse_multidegree("1,,2"), Errc::Parse);
    CHECK_ERRC(parse_multidegree("-1"), Errc::Parse);
    Polynomial f = parse("x1*y2 + x1^2 + y2", 2, 7);
    CHECK(!f.is_multihomogeneous());
    CHECK_ERRC(f.multidegree(), Errc::NotMultihomogeneous);
    CHECK(f.project({1, 1}) == parse("x1*y2", 2, 7));
    CHECK(component_dimension({1, 1, 1, 2}) == 24);
    CHECK(total_degree({1, 1, 1, 2}) == 5);
}

TEST_CASE("component_basis examples")
{
    CHECK(component_basis({1}) == std::vector<Monomial>{mono({1, 0}), mono({0, 1})});
    // grevlex-consistent order: y1y2 > x1y2 > y1x2 > x1x2
    CHECK(component_basis({1, 1}) ==
          std::vector<Monomial>{mono({1, 0, 1, 0}), mono({0, 1, 1, 0}), mono({1, 0, 0, 1}), mono({0, 1, 0, 1})});
    CHECK(component_basis({1, 1, 1, 2}).size() == 24);
}

TEST_CASE("block linear substitution")
{
    PrimeField F7(7);
    Polynomial y = Polynomial::y(1, F7, 1);
    // y -> g12 x + g22 y
    CHECK(apply_block_linear(y, {1, 3, 0, 1}) == parse("y1 + 3*x1", 1, 7));
    CHECK(apply_block_linear(Polynomial::u(2, F7, 1, 2), {2, 1, 3, 2}) == Polynomial::u(2, F7, 1, 2));
}

TEST_CASE("property: grevlex is a total order compatible with multiplication")
{
    std::mt19937_64 rng(kSeed);
    auto rand_mono = [&](std::size_t m) {
        std::vector<std::uint32_t> e(2 * m);
        for (auto& x : e)
            x = rng() % 4;
        return mono(std::move(e));
    };
    for (int t = 0; t < 500; ++t) {
        std::size_t m = 1 + rng() % 3;
        Monomial a = rand_mono(m), b = rand_mono(m), c = rand_mono(m);
        auto ab = grevlex_cmp(a, b);
        CHECK(grevlex_cmp(b, a) == 0 <=> ab);
        CHECK(grevlex_cmp(a * c, b * c) == ab);
        if (ab > 0 && grevlex_cmp(b, c) > 0)
            CHECK(grevlex_cmp(a, c) > 0);
    }
}

TEST_CASE("property: lead of a product is the product of leads")
{
    std::mt19937_64 rng(kSeed + 1);
    for (int t = 0; t < 200; ++t) {
        PrimeField F(rng() % 2 ? 3 : 7);
        std::size_t m = 1 + rng() % 3;
        Polynomial f = modinv::test::random_poly(rng, m, F, 4, 3);
        Polynomial g = modinv::test::random_poly(rng, m, F, 4, 3);
        if (f.is_zero() || g.is_zero())
            continue;
        Polynomial fg = f * g;
        CHECK(fg.lead_monomial() == f.lead_monomial() * g.lead_monomial());
        CHECK(fg.lead().coeff == F.mul(f.lead().coeff, g.lead().coeff));
        CHECK(Polynomial::parse(fg.to_string(), m, F) == fg);
        CHECK(std::is_sorted(fg.terms().begin(), fg.terms().end(),
                             [](const Term& a, const Term& b) { return GrevlexGreater{}(a.monomial, b.monomial); }));
    }
}

TEST_CASE("property: component basis is complete and distinct")
{
    std::mt19937_64 rng(kSeed + 2);
    for (int t = 0; t < 50; ++t) {
        MultiDegree lam = modinv::test::random_multidegree(rng, 1 + rng() % 4, 3);
        auto basis = component_basis(lam);
        CHECK(basis.size() == component_dimension(lam));
        std::set<std::vector<std::uint32_t>> seen;
        for (const auto& b : basis)
            seen.insert({b.exponents().begin(), b.exponents().end()});
        CHECK(seen.size() == basis.size());
        Component comp(lam);
        for (std::size_t i = 0; i < basis.size(); ++i)
            CHECK(comp.index(basis[i]) == i);
    }
}
