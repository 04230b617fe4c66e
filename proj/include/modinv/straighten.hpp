#pragma once

// Products x^a * prod u_ij^b_ij, Kempe uncrossing, the relation families
// among u_ij and x_i, and the summand-length criterion for such products.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "modinv/ffield.hpp"
#include "modinv/polyring.hpp"

namespace modinv {

struct UProduct {
    /// x-exponents a_1..a_m; the size fixes m.
    std::vector<std::uint32_t> x_exp;
    /// (i, j) with 1 <= i < j <= m mapped to the multiplicity b_ij > 0.
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> edges;

    std::size_t blocks() const noexcept { return x_exp.size(); }
    std::uint32_t degree() const;
    /// Adds u_ij (i < j) with multiplicity b.
    void add_edge(std::uint32_t i, std::uint32_t j, std::uint32_t b = 1);
    bool is_crossing_free() const;
    Polynomial expand(const PrimeField& field) const;
    std::string to_string() const;

    friend auto operator<=>(const UProduct&, const UProduct&) = default;
};

/// Sum over edges of b_ij * (j-i) * (m-(j-i)). Every uncrossing step lowers it.
std::uint64_t kempe_measure(const UProduct& P);

struct UncrossTerm {
    std::int64_t coeff;
    UProduct product;
};

/// Rewrites u_ik u_jl = u_ij u_kl + u_il u_jk (i<j<k<l) until no crossing is
/// left. Outputs are sorted and combined; coefficients are plain integers.
std::vector<UncrossTerm> uncross(const UProduct& P);

struct RelationReport {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint64_t three_term_checked = 0;
    std::uint64_t plucker_checked = 0;
};

/// Expands x_i u_jk - x_j u_ik + x_k u_ij (m >= 3) and
/// u_ij u_kl - u_ik u_jl + u_il u_jk (m >= 4) for all index tuples.
/// Throws Errc::RelationFailed if any of them is nonzero.
RelationReport verify_relations(std::uint32_t m, const PrimeField& field);

/// p if some r has sum_{i<=r} a_i + sum_{i<=r<=j, i<j} b_ij >= p-1,
/// otherwise 1 + sum a_i.
std::uint32_t summand_length_of_product(const UProduct& P, std::uint32_t p);

}  // namespace modinv
