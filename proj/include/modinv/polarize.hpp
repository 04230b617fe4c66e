#pragma once

// Polarisation and restitution between F[mV_2] and the split ring
// F[(l_1 + ... + l_m)V_2], where source block i is replaced by l_i copies.
//
// Split block (i, j), 1 <= j <= l_i, is target block offset(i) + j, so the
// split variables are ordered y_11 > x_11 > y_12 > x_12 > ... > y_21 > ...

#include <cstddef>
#include <cstdint>
#include <vector>

#include "modinv/cpaction.hpp"
#include "modinv/ffield.hpp"
#include "modinv/polyring.hpp"

namespace modinv {

class BlockSplit {
public:
    /// Source block i splits into sizes[i-1] target blocks. Zero sizes are
    /// allowed; such a source block has no image.
    explicit BlockSplit(MultiDegree sizes);

    std::size_t source_blocks() const noexcept { return sizes_.size(); }
    std::size_t target_blocks() const noexcept { return provenance_.size(); }
    const MultiDegree& sizes() const noexcept { return sizes_; }
    /// Source block (1-based) of target block t (1-based).
    std::size_t source_of(std::size_t t) const { return provenance_.at(t - 1); }
    /// Target blocks of source block i are offset(i)+1 .. offset(i)+sizes[i-1].
    std::size_t offset(std::size_t i) const { return offsets_.at(i - 1); }
    std::size_t target(std::size_t i, std::size_t j) const { return offset(i) + j; }

    friend bool operator==(const BlockSplit&, const BlockSplit&) = default;

private:
    MultiDegree sizes_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> provenance_;
};

/// Multinomial coefficient n! / (k_1! ... k_r!) mod p with sum k = n, by
/// Lucas' theorem (zero whenever a base-p digit sum carries).
Coeff multinomial_mod(const std::vector<std::uint64_t>& parts, const PrimeField& field);

/// pi_mu of the substitution x_i -> sum_j x_ij, y_i -> sum_j y_ij. `mu` is a
/// multidegree on the target blocks.
Polynomial nabla_project(const Polynomial& f, const BlockSplit& split, const MultiDegree& mu);

/// P(f) = pi_(1,...,1) nabla(f) for f of multidegree lambda, computed term by
/// term: x^a y^b contributes a! b! times each way of choosing which split
/// blocks carry the x's. Throws Errc::NotMultihomogeneous if f is not of
/// multidegree lambda.
Polynomial polarize_full(const Polynomial& f, const MultiDegree& lambda);

/// Same map by literal substitution and projection.
Polynomial polarize_by_substitution(const Polynomial& f, const MultiDegree& lambda);

/// Erases subscripts: x_ij -> x_i, y_ij -> y_i.
Polynomial restitute(const Polynomial& F, const BlockSplit& split);

/// Sum of F over all permutations of the split blocks within each source
/// block (the Young subgroup of the split).
Polynomial young_symmetrize(const Polynomial& F, const BlockSplit& split);

/// Decomposition of F[mV_2]_lambda without rank profiles: reduce lambda to
/// r with r_i < p, push theta(gamma) for every path of length |r| through
/// Young symmetrisation and restitution, and read m_h off the spans of the
/// images whose path labels a summand of dimension >= h.
ModuleDecomposition decompose_via_paths(const MultiDegree& lambda, const PrimeField& field);

/// Relabels the target blocks of F: block t goes to perm[t-1] (1-based).
Polynomial permute_blocks(const Polynomial& F, const std::vector<std::size_t>& perm);

}  // namespace modinv
