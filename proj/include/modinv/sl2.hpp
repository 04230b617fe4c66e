#pragma once

// Vector invariants of SL_2(F_p) acting diagonally on mV_2: the action, the
// Dickson invariants L and D with their polarisations, the set S_m, relative
// transfers from the Sylow p-subgroup P to the Borel subgroup B, and minimal
// generators computed one multidegree at a time.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modinv/ffield.hpp"
#include "modinv/polyring.hpp"

namespace modinv {

/// [[a, b], [c, d]] with ad - bc = 1.
struct SL2Element {
    Coeff a, b, c, d;

    /// Throws Errc::InvalidArgument unless the determinant is 1.
    static SL2Element make(Coeff a, Coeff b, Coeff c, Coeff d, const PrimeField& field);
    SL2Element times(const SL2Element& h, const PrimeField& field) const;
    BlockLinearMap as_map() const { return {a, b, c, d}; }
    friend bool operator==(const SL2Element&, const SL2Element&) = default;
};

/// [[1, 1], [0, 1]]: acts as sigma.
SL2Element sl2_upper(const PrimeField& field);
/// [[1, 0], [1, 1]]: x -> x + y.
SL2Element sl2_lower(const PrimeField& field);
/// diag(a, a^-1).
SL2Element sl2_torus(Coeff a, const PrimeField& field);
/// All p(p^2 - 1) elements.
std::vector<SL2Element> sl2_elements(const PrimeField& field);

/// Every block (x_i, y_i) -> (x_i, y_i) g, i.e. x -> a x + c y and
/// y -> b x + d y. act(gh) = act(g) o act(h).
Polynomial sl2_act(const SL2Element& g, const Polynomial& f);

struct DicksonPair {
    Polynomial L;  // x N(y) = x y^p - x^p y
    Polynomial D;  // N(y)^(p-1) + x^(p(p-1))
};

DicksonPair dickson(const PrimeField& field);

/// pi_lambda of L (|lambda| = p+1) or D (|lambda| = p(p-1)) polarised to m
/// blocks. Throws Errc::DegreeMismatch for any other total degree.
Polynomial polarize_LD(const PrimeField& field, const MultiDegree& lambda);

/// Compositions of p(p-1) into m parts, each divisible by p, in decreasing
/// lexicographic order.
std::vector<MultiDegree> dickson_multidegrees(std::uint32_t p, std::uint32_t m);

struct SL2Generator {
    std::string label;
    MultiDegree multidegree;
    Polynomial poly;
};

/// {u_ij : i < j} + {L_i} + {L_ij : i != j} + {D_lambda : lambda in D_m}.
std::vector<SL2Generator> build_Sm(const PrimeField& field, std::uint32_t m);

/// Tr_P^B(N(y)^alpha x^beta) by the weight rule: -f when
/// |beta| - |alpha| = 0 mod p-1, else 0.
Polynomial rel_transfer_PB(const std::vector<std::uint32_t>& alpha, const std::vector<std::uint32_t>& beta,
                           const PrimeField& field);
/// Sum of diag(a, a^-1).f over a in F_p^*.
Polynomial rel_transfer_PB_direct(const Polynomial& f);
/// N(y)^alpha x^beta.
Polynomial norm_monomial(const std::vector<std::uint32_t>& alpha, const std::vector<std::uint32_t>& beta,
                         const PrimeField& field);

/// Basis of the SL_2 invariants of multidegree lambda as dense vectors in
/// Component(lambda), echelonised.
std::vector<std::vector<Coeff>> sl2_invariant_vectors(const MultiDegree& lambda, const PrimeField& field);

struct SL2Options {
    unsigned workers = 1;
    /// Wall-clock limit; falls back to MODINV_BUDGET_SECS when unset.
    std::optional<double> budget_secs;
    /// Cap on the estimated work sum(dim^3) over all multidegrees.
    double max_work = 2e11;
};

struct SL2GeneratorReport {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t d_max = 0;
    /// total degree -> number of new generators
    std::map<std::uint32_t, std::uint64_t> per_degree;
    /// multidegree -> number of new generators, nonzero entries only
    std::map<MultiDegree, std::uint64_t> per_multidegree;
    std::uint64_t total = 0;
    std::uint32_t noether_number = 0;
    std::uint64_t sm_size = 0;
    /// (p+m-2)(p-1)
    std::uint32_t bound = 0;
};

/// Throws Errc::InfeasibleSize before starting if the estimate exceeds
/// max_work, Errc::BudgetExceeded if the time budget runs out.
SL2GeneratorReport minimal_generators_sl2(std::uint32_t p, std::uint32_t m, std::uint32_t d_max,
                                          const SL2Options& opts = {});

struct MembershipReport {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t d_max = 0;
    std::uint64_t multidegrees_checked = 0;
    /// Multidegrees where the invariants exceed F[S_m] + Im Tr.
    std::vector<MultiDegree> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// Checks R_lambda = F[S_m]_lambda + Tr^{SL_2}(F[mV_2]_lambda) for every
/// multidegree with |lambda| <= d_max.
MembershipReport verify_sm_membership(std::uint32_t p, std::uint32_t m, std::uint32_t d_max,
                                      const SL2Options& opts = {});

/// B-invariants of multidegree lambda equal the weight-zero P-invariants.
bool borel_weight_check(const MultiDegree& lambda, const PrimeField& field);

/// L_ij = x_i N(y_j) + u_ij x_j^(p-1) and L_ji = x_j N(y_i) - u_ij x_i^(p-1)
/// for all i < j <= m.
bool lemma_L_holds(const PrimeField& field, std::uint32_t m);

/// nabla_m(D) - ((sum N(y_i))^(p-1) + (sum x_i)^(p(p-1))) vanishes on the
/// rank-one locus x_i = a_i X, y_i = a_i Y.
bool lemma_D_holds(const PrimeField& field, std::uint32_t m);

/// Compositions of d into m non-negative parts, decreasing lexicographic.
std::vector<MultiDegree> compositions(std::uint32_t d, std::uint32_t m);

}  // namespace modinv
