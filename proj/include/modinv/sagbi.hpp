#pragma once

// The generating sets
//   B  = {x_i, N(y_i), u_ij, Tr(y^E) : 0 <= e_i <= p-1}
//   B' = {x_i, N(y_i), u_ij, Tr(y^E) : 0 <= e_i <= p-1, |E| > 2(p-1)}
// of F[mV_2]^{C_p}, lead-monomial factorisation and subduction.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modinv/ffield.hpp"
#include "modinv/polyring.hpp"

namespace modinv {

enum class GeneratorKind { Xi, NormYi, Uij, TraceE };
enum class Variant { Full, Minimal };

std::string to_string(GeneratorKind kind);
std::string to_string(Variant variant);

struct Generator {
    GeneratorKind kind;
    /// {i} for Xi and NormYi, {i, j} for Uij, E (size m) for TraceE.
    std::vector<std::uint32_t> payload;
    Polynomial poly;
    Monomial lead;

    std::string label() const;
};

struct GeneratorSet {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    Variant variant = Variant::Full;
    std::vector<Generator> elements;

    /// Copy with element `idx` removed.
    GeneratorSet without(std::size_t idx) const;
};

/// Full drops the transfers that vanish (|E| < p-1). With `bound`, only
/// generators whose multidegree is componentwise <= bound are built, which is
/// all that matters for invariants of multidegree bound.
GeneratorSet build_generators(std::uint32_t p, std::uint32_t m, Variant variant,
                              const std::optional<MultiDegree>& bound = std::nullopt);

/// (generator index, exponent) pairs.
using Factorization = std::vector<std::pair<std::size_t, std::uint32_t>>;

/// Writes `mon` as a product of generator lead monomials, if possible.
std::optional<Factorization> lm_factorizes(const Monomial& mon, const GeneratorSet& gens);

struct SagbiReport {
    MultiDegree lambda;
    std::uint32_t p = 0;
    std::size_t checked = 0;
    std::vector<Monomial> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// Factors the lead monomial of every element of the invariant basis of
/// multidegree lambda.
SagbiReport sagbi_verify(const MultiDegree& lambda, const GeneratorSet& gens);

struct SubductionStep {
    Coeff coeff;
    Factorization factors;
};

struct SubductionResult {
    std::vector<SubductionStep> expression;
    Polynomial remainder;
};

/// Repeatedly cancels the lead term of f with a product of generators whose
/// leads multiply to it. Stops at zero or at a lead that does not factor.
/// Throws Errc::NotInvariant.
SubductionResult subduct(const Polynomial& f, const GeneratorSet& gens);

/// Product of generator polynomials per the factorization.
Polynomial evaluate(const Factorization& factors, const GeneratorSet& gens);

struct MinimalityReport {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    /// Labels of B' elements that subduct to zero against the rest.
    std::vector<std::string> redundant;
    std::size_t generators_checked = 0;
    /// Tr(y^E) with p-1 <= |E| <= 2(p-1) that do not subduct to zero over B'.
    std::vector<std::string> unreduced_transfers;
    std::size_t transfers_checked = 0;

    bool passed() const noexcept { return redundant.empty() && unreduced_transfers.empty(); }
};

MinimalityReport minimality_report(std::uint32_t p, std::uint32_t m);

}  // namespace modinv
