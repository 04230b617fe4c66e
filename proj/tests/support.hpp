#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <doctest.h>

#include "modinv/component.hpp"
#include "modinv/error.hpp"
#include "modinv/polyring.hpp"

namespace modinv::test {

inline constexpr std::uint64_t kSeed = 0x6d6f64696e76ULL;

#define CHECK_ERRC(expr, errc)                                   \
    do {                                                         \
        bool thrown_ = false;                                    \
        try {                                                    \
            (void)(expr);                                        \
        } catch (const ::modinv::Error& e_) {                    \
            thrown_ = true;                                      \
            CHECK(e_.code() == (errc));                          \
        }                                                        \
        CHECK_MESSAGE(thrown_, "expected " #errc " from " #expr); \
    } while (0)

inline Polynomial parse(const char* text, std::size_t blocks, std::uint32_t p)
{
    return Polynomial::parse(text, blocks, PrimeField(p));
}

inline MultiDegree random_multidegree(std::mt19937_64& rng, std::size_t m, std::uint32_t max_part)
{
    MultiDegree lam(m);
    for (auto& l : lam)
        l = static_cast<std::uint32_t>(rng() % (max_part + 1));
    return lam;
}

/// Random element of the component of multidegree lambda (possibly zero).
inline Polynomial random_in_component(std::mt19937_64& rng, const MultiDegree& lambda, const PrimeField& F)
{
    Component comp(lambda);
    std::vector<Coeff> v(comp.dim());
    for (auto& c : v)
        c = static_cast<Coeff>(rng() % F.p());
    return comp.from_dense(v, F);
}

/// Random sparse polynomial with up to `terms` terms and per-variable degree <= max_exp.
inline Polynomial random_poly(std::mt19937_64& rng, std::size_t m, const PrimeField& F, int terms, std::uint32_t max_exp)
{
    std::vector<Term> out;
    for (int t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> e(2 * m);
        for (auto& x : e)
            x = static_cast<std::uint32_t>(rng() % (max_exp + 1));
        out.push_back({Monomial(std::move(e)), static_cast<Coeff>(rng() % F.p())});
    }
    return Polynomial::from_terms(m, F, std::move(out));
}

}  // namespace modinv::test
