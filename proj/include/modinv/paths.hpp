#pragma once

// Lattice paths as words over {x, y}: classification into partial Dyck paths
// (PDP) and initial Dyck paths (IDP), counting recursions, the matching rho,
// and the invariants theta(gamma) labelling the summands of the d-fold tensor
// power of V_2.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modinv/ffield.hpp"
#include "modinv/polyring.hpp"

namespace modinv {

/// A word of length <= 63. Bit i (0-based) set means step i+1 is a y-step.
class LatticePath {
public:
    LatticePath() = default;
    LatticePath(std::uint64_t bits, std::uint32_t length);
    /// Accepts characters x/X and y/Y. Throws Errc::Parse.
    static LatticePath parse(std::string_view word);

    std::uint32_t length() const noexcept { return length_; }
    std::uint64_t bits() const noexcept { return bits_; }
    /// 1-based step.
    bool is_y(std::uint32_t step) const { return (bits_ >> (step - 1)) & 1u; }
    /// max over prefixes of #x - #y (0 for the empty path).
    std::int32_t height() const;
    /// #x - #y over the whole word.
    std::int32_t finishing_height() const;
    std::string word() const;
    LatticePath prefix(std::uint32_t len) const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    std::uint64_t bits_ = 0;
    std::uint32_t length_ = 0;
};

enum class PathKind { PDP, IDP, Neither };

struct PathClass {
    PathKind kind = PathKind::Neither;
    std::uint32_t finishing_height = 0;  // meaningful for PDP only

    /// Dimension of the summand labelled by the path: h+1 for PDP(h), p for IDP.
    std::uint32_t summand_dimension(std::uint32_t p) const;
    std::string to_string() const;
    friend bool operator==(const PathClass&, const PathClass&) = default;
};

/// PDP(h) if the path stays on or below the diagonal with height <= p-2; IDP if
/// it reaches height p-1 before ever going above the diagonal; else Neither.
PathClass classify_path(const LatticePath& path, std::uint32_t p);

struct ClassifiedPath {
    LatticePath path;
    PathClass cls;
};

/// All PDP and IDP paths of length d, in increasing word order (x < y, first
/// letter most significant).
std::vector<ClassifiedPath> enumerate_paths(std::uint32_t d, std::uint32_t p);

/// Brute-force tally over all 2^d words.
struct PathTally {
    std::vector<std::uint64_t> pdp;  // pdp[h] for h = 0..p-2
    std::uint64_t idp = 0;
    std::uint64_t neither = 0;
};
PathTally tally_paths(std::uint32_t d, std::uint32_t p);

struct CountTables {
    std::uint32_t p = 0;
    std::uint32_t d_max = 0;
    /// mu[d][h-1] = multiplicity of V_h in the d-fold tensor power, h = 1..p.
    std::vector<std::vector<std::uint64_t>> mu;
    /// nu[d][h] = |PDP_d^{p-2}(h)|, h = 0..p-2.
    std::vector<std::vector<std::uint64_t>> nu;
    /// nu_bar[d] = |IDP_d^{p-1}|.
    std::vector<std::uint64_t> nu_bar;
};

/// mu from the tensor-product recursion (closed form for p = 2), nu and nu_bar
/// from the path recursions.
CountTables count_tables(std::uint32_t d_max, std::uint32_t p);

/// nu_q^d(h) for 0 <= h <= q by the height recursion.
std::vector<std::vector<std::uint64_t>> nu_table(std::uint32_t d_max, std::uint32_t q);
/// bar nu_q^d by bar nu^{d+1} = nu_{q-1}^d(q-1) + 2 bar nu^d, bar nu^0 = 0.
std::vector<std::uint64_t> nu_bar_table(std::uint32_t d_max, std::uint32_t q);

/// The greedy matching of y-steps to earlier x-steps. Positions are 1-based.
struct Matching {
    std::vector<std::uint32_t> rho;  // rho[j] = matched x position, 0 if j is not a matched y
    std::vector<std::uint32_t> i1, i2, i3, i4, i5;
    std::uint32_t s = 0;  // length of the matched prefix (d for PDP)

    std::optional<std::uint32_t> rho_of(std::uint32_t j) const
    {
        return j < rho.size() && rho[j] ? std::optional<std::uint32_t>(rho[j]) : std::nullopt;
    }
};

/// For a PDP the whole word is matched. For an IDP the prefix ending at the
/// first point of height p-1 is matched and the suffix fills I4 (x) and I5 (y).
/// Throws Errc::NotInDomain for Neither paths and Errc::UnmatchedY if a y
/// finds no free earlier x.
Matching match_path(const LatticePath& path, std::uint32_t p);

/// Lambda(gamma) = z_1 ... z_d with z_i = x_i or y_i per step, in F[dV_2].
Monomial lambda_monomial(const LatticePath& path);

/// theta(gamma) (the socle invariant) and theta'(gamma) (the generator) in
/// F[dV_2]. Throws Errc::NotInDomain for Neither paths.
Polynomial theta(const LatticePath& path, const PrimeField& field);
Polynomial theta_prime(const LatticePath& path, const PrimeField& field);

struct TensorSummand {
    LatticePath path;
    std::uint32_t dimension;
};

std::vector<TensorSummand> tensor_decompose(std::uint32_t d, std::uint32_t p);

}  // namespace modinv
