#pragma once

// The C_p action sigma: x_i -> x_i, y_i -> y_i + x_i on F[mV_2], and the
// module structure of its multidegree components.

#include <cstdint>
#include <map>
#include <vector>

#include "modinv/component.hpp"
#include "modinv/ffield.hpp"
#include "modinv/polyring.hpp"

namespace modinv {

/// sigma^k: y_i -> y_i + k x_i.
Polynomial apply_sigma(const Polynomial& f, std::uint32_t k = 1);
/// Sum of sigma^k(f) over k = 0..p-1.
Polynomial transfer(const Polynomial& f);
/// N(y_i) = y_i^p - x_i^(p-1) y_i in a ring with `blocks` blocks.
Polynomial norm(std::size_t blocks, const PrimeField& field, std::size_t i);
/// sum_{i=0}^{p-1} i^t for t >= 1. Throws Errc::InvalidArgument for t = 0.
Coeff power_sum(std::uint64_t t, const PrimeField& field);

bool is_invariant(const Polynomial& f);

/// Matrix of sigma^k on the component.
FpMatrix sigma_matrix(const Component& comp, const PrimeField& field, std::uint32_t k = 1);
/// Matrix of sigma - 1 on the component.
FpMatrix sigma_minus_one(const Component& comp, const PrimeField& field);

/// Invariants of multidegree lambda, one per lead monomial, each monic and
/// reduced against the others; sorted by lead monomial, largest first.
std::vector<Polynomial> invariant_basis(const MultiDegree& lambda, const PrimeField& field);

/// The chain im(sigma-1) >= im(sigma-1)^2 >= ... on one component, kept as
/// echelon bases so that membership and length queries are cheap.
class SigmaFiltration {
public:
    SigmaFiltration(const MultiDegree& lambda, const PrimeField& field);

    const Component& component() const noexcept { return comp_; }
    const PrimeField& field() const noexcept { return field_; }
    const FpMatrix& operator_matrix() const noexcept { return a_; }

    /// dim im (sigma-1)^r for r = 0..p+1.
    std::vector<std::uint64_t> rank_profile() const;
    bool in_image(const std::vector<Coeff>& v, std::uint32_t r) const;
    /// 1 + max{r : v in im (sigma-1)^r}. v must be a nonzero invariant.
    std::uint32_t length(const std::vector<Coeff>& v) const;

    /// For each lead monomial of an invariant (by component index), the length
    /// of the summand it labels: 1 + max{r : index is a lead monomial of
    /// ker(sigma-1) intersected with im(sigma-1)^r}.
    std::map<std::size_t, std::uint32_t> lead_lengths() const;

private:
    Component comp_;
    PrimeField field_;
    FpMatrix a_;
    std::vector<EchelonBasis> images_;  // images_[r-1] = im A^r, r = 1..p-1
};

/// Length of a nonzero multihomogeneous invariant. Throws Errc::ZeroPolynomial,
/// Errc::NotMultihomogeneous or Errc::NotInvariant.
std::uint32_t length(const Polynomial& f);

struct ModuleDecomposition {
    std::uint32_t p = 0;
    /// multiplicities[i-1] = m_i, the number of summands V_i, for i = 1..p.
    std::vector<std::uint64_t> multiplicities;

    std::uint64_t dimension() const;
    std::uint64_t summand_count() const;
    /// Nonzero multiplicities keyed by summand dimension.
    std::map<std::uint32_t, std::uint64_t> nonzero() const;

    friend bool operator==(const ModuleDecomposition&, const ModuleDecomposition&) = default;
};

/// Multiplicities from a rank profile d_0..d_p (d_j = dim im (sigma-1)^j):
/// m_i = d_{i-1} - 2 d_i + d_{i+1} with d_p = d_{p+1} = 0.
ModuleDecomposition decompose_from_ranks(const std::vector<std::uint64_t>& ranks, std::uint32_t p);
/// Solves (p-j) m_p + ... + (i-j) m_i = d_j by back substitution from j = p-1.
/// Used to cross-check decompose_from_ranks.
ModuleDecomposition solve_rank_system(const std::vector<std::uint64_t>& ranks, std::uint32_t p);

ModuleDecomposition decompose_component(const MultiDegree& lambda, const PrimeField& field);

struct PeriodicityResult {
    MultiDegree reduced;
    std::uint64_t projective_count = 0;
};

PeriodicityResult periodicity_reduce(const MultiDegree& lambda, std::uint32_t p);

}  // namespace modinv
