#include "modinv/sl2.hpp"

#include <algorithm>
#include <numeric>

#include "modinv/component.hpp"
#include "modinv/cpaction.hpp"
#include "modinv/parallel.hpp"
#include "modinv/polarize.hpp"

namespace modinv {

SL2Element SL2Element::make(Coeff a, Coeff b, Coeff c, Coeff d, const PrimeField& F)
{
    SL2Element g{F.reduce(a), F.reduce(b), F.reduce(c), F.reduce(d)};
    if (F.sub(F.mul(g.a, g.d), F.mul(g.b, g.c)) != 1 % F.p())
        throw Error(Errc::InvalidArgument, "matrix does not have determinant 1");
    return g;
}

SL2Element SL2Element::times(const SL2Element& h, const PrimeField& F) const
{
    return {F.add(F.mul(a, h.a), F.mul(b, h.c)), F.add(F.mul(a, h.b), F.mul(b, h.d)),
            F.add(F.mul(c, h.a), F.mul(d, h.c)), F.add(F.mul(c, h.b), F.mul(d, h.d))};
}

SL2Element sl2_upper(const PrimeField& F)
{
    return SL2Element::make(1, 1, 0, 1, F);
}

SL2Element sl2_lower(const PrimeField& F)
{
    return SL2Element::make(1, 0, 1, 1, F);
}

SL2Element sl2_torus(Coeff a, const PrimeField& F)
{
    return SL2Element::make(a, 0, 0, F.inv(F.reduce(a)), F);
}

std::vector<SL2Element> sl2_elements(const PrimeField& F)
{
    std::vector<SL2Element> out;
    const Coeff p = F.p();
    for (Coeff a = 0; a < p; ++a)
        for (Coeff b = 0; b < p; ++b)
            for (Coeff c = 0; c < p; ++c)
                for (Coeff d = 0; d < p; ++d)
                    if (F.sub(F.mul(a, d), F.mul(b, c)) == 1 % p)
                        out.push_back({a, b, c, d});
    return out;
}

Polynomial sl2_act(const SL2Element& g, const Polynomial& f)
{
    return apply_block_linear(f, g.as_map());
}

DicksonPair dickson(const PrimeField& F)
{
    const std::uint32_t p = F.p();
    Polynomial x = Polynomial::x(1, F, 1);
    Polynomial n = norm(1, F, 1);
    return {x * n, n.pow(p - 1) + x.pow(static_cast<std::uint64_t>(p) * (p - 1))};
}

Polynomial polarize_LD(const PrimeField& F, const MultiDegree& lambda)
{
    const std::uint64_t p = F.p();
    const std::uint64_t d = total_degree(lambda);
    DicksonPair LD = dickson(F);
    BlockSplit split({static_cast<std::uint32_t>(lambda.size())});
    if (d == p + 1)
        return nabla_project(LD.L, split, lambda);
    if (d == p * (p - 1))
        return nabla_project(LD.D, split, lambda);
    throw Error(Errc::DegreeMismatch, "multidegree " + to_string(lambda) + " matches neither deg L = " +
                                          std::to_string(p + 1) + " nor deg D = " + std::to_string(p * (p - 1)));
}

std::vector<MultiDegree> compositions(std::uint32_t d, std::uint32_t m)
{
    std::vector<MultiDegree> out;
    if (m == 0) {
        if (d == 0)
            out.push_back({});
        return out;
    }
    MultiDegree cur(m, 0);
    auto rec = [&](auto&& self, std::uint32_t i, std::uint32_t left) -> void {
        if (i + 1 == m) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (std::uint32_t v = left + 1; v-- > 0;) {
            cur[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, d);
    return out;
}

std::vector<MultiDegree> dickson_multidegrees(std::uint32_t p, std::uint32_t m)
{
    auto out = compositions(p - 1, m);
    for (auto& lambda : out)
        for (auto& v : lambda)
            v *= p;
    return out;
}

std::vector<SL2Generator> build_Sm(const PrimeField& F, std::uint32_t m)
{
    if (m < 1)
        throw Error(Errc::InvalidArgument, "need at least one block");
    const std::uint32_t p = F.p();
    std::vector<SL2Generator> out;
    auto unit = [&](std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> entries) {
        MultiDegree lambda(m, 0);
        for (auto [i, v] : entries)
            lambda[i - 1] += v;
        return lambda;
    };
    for (std::uint32_t i = 1; i <= m; ++i)
        for (std::uint32_t j = i + 1; j <= m; ++j)
            out.push_back({"u" + std::to_string(i) + "_" + std::to_string(j), unit({{i, 1}, {j, 1}}),
                           Polynomial::u(m, F, i, j)});
    for (std::uint32_t i = 1; i <= m; ++i) {
        MultiDegree lambda = unit({{i, p + 1}});
        out.push_back({"L" + std::to_string(i), lambda, polarize_LD(F, lambda)});
    }
    for (std::uint32_t i = 1; i <= m; ++i)
        for (std::uint32_t j = 1; j <= m; ++j)
            if (i != j) {
                MultiDegree lambda = unit({{i, 1}, {j, p}});
                out.push_back({"L" + std::to_string(i) + "_" + std::to_string(j), lambda, polarize_LD(F, lambda)});
            }
    for (const auto& lambda : dickson_multidegrees(p, m))
        out.push_back({"D(" + to_string(lambda) + ")", lambda, polarize_LD(F, lambda)});
    return out;
}

Polynomial norm_monomial(const std::vector<std::uint32_t>& alpha, const std::vector<std::uint32_t>& beta,
                         const PrimeField& F)
{
    if (alpha.size() != beta.size())
        throw Error(Errc::DimensionMismatch, "alpha and beta differ in length");
    const std::size_t m = alpha.size();
    Polynomial out = Polynomial::constant(m, F, 1);
    for (std::size_t i = 1; i <= m; ++i) {
        if (alpha[i - 1])
            out *= norm(m, F, i).pow(alpha[i - 1]);
        if (beta[i - 1])
            out *= Polynomial::x(m, F, i).pow(beta[i - 1]);
    }
    return out;
}

Polynomial rel_transfer_PB(const std::vector<std::uint32_t>& alpha, const std::vector<std::uint32_t>& beta,
                           const PrimeField& F)
{
    Polynomial f = norm_monomial(alpha, beta, F);
    const std::int64_t w = static_cast<std::int64_t>(std::accumulate(beta.begin(), beta.end(), std::uint64_t{0})) -
                           static_cast<std::int64_t>(std::accumulate(alpha.begin(), alpha.end(), std::uint64_t{0}));
    const std::int64_t q = static_cast<std::int64_t>(F.p()) - 1;
    if (w % q == 0)
        return -f;
    return Polynomial(f.blocks(), F);
}

Polynomial rel_transfer_PB_direct(const Polynomial& f)
{
    const PrimeField& F = f.field();
    Polynomial out(f.blocks(), F);
    for (Coeff a = 1; a < F.p(); ++a)
        out += sl2_act(sl2_torus(a, F), f);
    return out;
}

namespace {

// Column indices of the monomials with #x - #y = 0 mod p-1.
std::vector<std::size_t> weight_zero_columns(const Component& comp, std::uint32_t p)
{
    const std::int64_t q = static_cast<std::int64_t>(p) - 1;
    const std::int64_t deg = static_cast<std::int64_t>(total_degree(comp.lambda()));
    std::vector<std::size_t> cols;
    for (std::size_t idx = 0; idx < comp.dim(); ++idx) {
        std::int64_t xs = 0;
        for (std::size_t b = 1; b <= comp.blocks(); ++b)
            xs += comp.x_exponent(idx, b);
        if ((2 * xs - deg) % q == 0)
            cols.push_back(idx);
    }
    return cols;
}

// Echelon basis of the common kernel of the (M - 1) restricted to `cols`.
EchelonBasis restricted_kernel(const Component& comp, const std::vector<FpMatrix>& ops,
                               const std::vector<std::size_t>& cols, const PrimeField& F)
{
    EchelonBasis out(comp.dim(), F);
    if (cols.empty())
        return out;
    FpMatrix stacked = ops.front().select_columns(cols);
    for (std::size_t k = 1; k < ops.size(); ++k)
        stacked = FpMatrix::stack(stacked, ops[k].select_columns(cols));
    for (const auto& v : kernel_basis(stacked)) {
        std::vector<Coeff> full(comp.dim(), 0);
        for (std::size_t k = 0; k < cols.size(); ++k)
            full[cols[k]] = v[k];
        out.insert(std::move(full));
    }
    return out;
}

FpMatrix minus_identity(const Component& comp, const SL2Element& g, const PrimeField& F)
{
    return block_linear_matrix(comp, g.as_map(), F) - FpMatrix::identity(comp.dim(), F);
}

std::vector<std::size_t> all_columns(const Component& comp)
{
    std::vector<std::size_t> cols(comp.dim());
    std::iota(cols.begin(), cols.end(), 0);
    return cols;
}

bool le(const MultiDegree& a, const MultiDegree& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

MultiDegree minus(const MultiDegree& a, const MultiDegree& b)
{
    MultiDegree out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

std::vector<MultiDegree> multidegrees_upto(std::uint32_t d_max, std::uint32_t m)
{
    std::vector<MultiDegree> out;
    for (std::uint32_t d = 1; d <= d_max; ++d)
        for (auto& lambda : compositions(d, m))
            out.push_back(std::move(lambda));
    return out;
}

void check_work(const std::vector<MultiDegree>& lambdas, double max_work)
{
    double work = 0;
    for (const auto& lambda : lambdas) {
        double n = static_cast<double>(component_dimension(lambda));
        work += n * n * n;
    }
    if (work > max_work)
        throw Error(Errc::InfeasibleSize, "estimated work " + std::to_string(work) + " exceeds the limit " +
                                              std::to_string(max_work));
}

Deadline deadline_for(const SL2Options& opts)
{
    return opts.budget_secs ? Deadline(*opts.budget_secs) : Deadline::from_env();
}

std::uint32_t total(const MultiDegree& lambda)
{
    return static_cast<std::uint32_t>(total_degree(lambda));
}

}  // namespace

std::vector<std::vector<Coeff>> sl2_invariant_vectors(const MultiDegree& lambda, const PrimeField& F)
{
    Component comp(lambda);
    std::vector<FpMatrix> ops{minus_identity(comp, sl2_upper(F), F), minus_identity(comp, sl2_lower(F), F)};
    return restricted_kernel(comp, ops, weight_zero_columns(comp, F.p()), F).rows();
}

SL2GeneratorReport minimal_generators_sl2(std::uint32_t p, std::uint32_t m, std::uint32_t d_max,
                                          const SL2Options& opts)
{
    if (!is_prime(p))
        throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (m < 1)
        throw Error(Errc::InvalidArgument, "need at least one block");
    if (d_max < 2)
        throw Error(Errc::InvalidArgument, "degree bound must be at least 2");
    const PrimeField F(p);
    const Deadline deadline = deadline_for(opts);
    const auto lambdas = multidegrees_upto(d_max, m);
    check_work(lambdas, opts.max_work);

    auto invariants = parallel_map(lambdas, opts.workers, [&](const MultiDegree& lambda) {
        deadline.check();
        return sl2_invariant_vectors(lambda, F);
    });
    std::map<MultiDegree, std::vector<std::vector<Coeff>>> basis;
    for (std::size_t k = 0; k < lambdas.size(); ++k)
        basis.emplace(lambdas[k], std::move(invariants[k]));

    // generators[mu] = dense vectors of the new generators of multidegree mu
    std::map<MultiDegree, std::vector<std::vector<Coeff>>> generators;
    SL2GeneratorReport rep;
    rep.p = p;
    rep.m = m;
    rep.d_max = d_max;
    rep.bound = (p + m - 2) * (p - 1);
    rep.sm_size = static_cast<std::uint64_t>(m) * (m - 1) / 2 + m + static_cast<std::uint64_t>(m) * (m - 1) +
                  dickson_multidegrees(p, m).size();

    for (std::uint32_t d = 1; d <= d_max; ++d) {
        auto level = compositions(d, m);
        auto found = parallel_map(level, opts.workers, [&](const MultiDegree& lambda) {
            const auto& inv = basis.at(lambda);
            std::vector<std::vector<Coeff>> fresh;
            if (inv.empty())
                return fresh;
            Component target(lambda);
            EchelonBasis dec(target.dim(), F);
            for (const auto& [mu, gens] : generators) {
                if (dec.size() == inv.size())
                    break;
                if (!le(mu, lambda) || mu == lambda)
                    continue;
                MultiDegree nu = minus(lambda, mu);
                const auto& cofactors = basis.at(nu);
                Component cm(mu), cn(nu);
                for (const auto& g : gens) {
                    for (const auto& b : cofactors) {
                        dec.insert(multiply_dense(cm, g, cn, b, target, F));
                        if (dec.size() == inv.size())
                            break;
                    }
                    if (dec.size() == inv.size())
                        break;
                    deadline.check();
                }
            }
            for (const auto& v : inv)
                if (dec.insert(v))
                    fresh.push_back(v);
            return fresh;
        });
        for (std::size_t k = 0; k < level.size(); ++k) {
            if (found[k].empty())
                continue;
            rep.per_degree[d] += found[k].size();
            rep.per_multidegree[level[k]] = found[k].size();
            rep.total += found[k].size();
            rep.noether_number = d;
            generators.emplace(level[k], std::move(found[k]));
        }
    }
    return rep;
}

MembershipReport verify_sm_membership(std::uint32_t p, std::uint32_t m, std::uint32_t d_max, const SL2Options& opts)
{
    if (!is_prime(p))
        throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    const PrimeField F(p);
    const Deadline deadline = deadline_for(opts);
    const auto lambdas = multidegrees_upto(d_max, m);
    // The group sum costs |SL_2| dense matrices per multidegree.
    check_work(lambdas, opts.max_work / std::max<double>(1.0, static_cast<double>(p) * p * p / 8));

    std::vector<std::pair<Component, std::vector<Coeff>>> sm;
    for (const auto& g : build_Sm(F, m))
        if (total(g.multidegree) <= d_max) {
            Component c(g.multidegree);
            auto v = c.to_dense(g.poly);
            sm.emplace_back(std::move(c), std::move(v));
        }
    const auto group = sl2_elements(F);

    // products[lambda] = basis of F[S_m]_lambda
    std::map<MultiDegree, std::vector<std::vector<Coeff>>> products;
    products[MultiDegree(m, 0)] = {{1 % p}};
    MembershipReport rep;
    rep.p = p;
    rep.m = m;
    rep.d_max = d_max;
    for (std::uint32_t d = 1; d <= d_max; ++d) {
        auto level = compositions(d, m);
        auto results = parallel_map(level, opts.workers, [&](const MultiDegree& lambda) {
            deadline.check();
            Component comp(lambda);
            EchelonBasis span(comp.dim(), F);
            for (const auto& [c, v] : sm) {
                if (!le(c.lambda(), lambda))
                    continue;
                MultiDegree nu = minus(lambda, c.lambda());
                Component cn(nu);
                for (const auto& b : products.at(nu))
                    span.insert(multiply_dense(c, v, cn, b, comp, F));
            }
            std::vector<std::vector<Coeff>> prod_rows = span.rows();
            FpMatrix sum(comp.dim(), comp.dim(), F);
            for (const auto& g : group)
                sum = sum + block_linear_matrix(comp, g.as_map(), F);
            FpMatrix cols = sum.transposed();
            for (std::size_t c = 0; c < comp.dim(); ++c)
                span.insert(std::vector<Coeff>(cols.row(c).begin(), cols.row(c).end()));
            bool ok = true;
            for (const auto& v : sl2_invariant_vectors(lambda, F))
                if (!span.contains(v)) {
                    ok = false;
                    break;
                }
            return std::make_pair(std::move(prod_rows), ok);
        });
        for (std::size_t k = 0; k < level.size(); ++k) {
            ++rep.multidegrees_checked;
            if (!results[k].second)
                rep.failures.push_back(level[k]);
            products[level[k]] = std::move(results[k].first);
        }
    }
    return rep;
}

bool borel_weight_check(const MultiDegree& lambda, const PrimeField& F)
{
    Component comp(lambda);
    Coeff gen = 1;
    for (Coeff a = 1; a < F.p(); ++a) {
        std::uint32_t order = 1;
        for (Coeff t = a; t != 1 % F.p(); t = F.mul(t, a))
            ++order;
        if (order == F.p() - 1) {
            gen = a;
            break;
        }
    }
    FpMatrix sigma = minus_identity(comp, sl2_upper(F), F);
    FpMatrix torus = minus_identity(comp, sl2_torus(gen, F), F);
    EchelonBasis borel = restricted_kernel(comp, {sigma, torus}, all_columns(comp), F);
    EchelonBasis slice = restricted_kernel(comp, {sigma}, weight_zero_columns(comp, F.p()), F);
    if (borel.size() != slice.size())
        return false;
    for (const auto& v : borel.rows())
        if (!slice.contains(v))
            return false;
    return true;
}

bool lemma_L_holds(const PrimeField& F, std::uint32_t m)
{
    const std::uint32_t p = F.p();
    for (std::uint32_t i = 1; i <= m; ++i) {
        MultiDegree li(m, 0);
        li[i - 1] = p + 1;
        Polynomial x = Polynomial::x(m, F, i), y = Polynomial::y(m, F, i);
        if (polarize_LD(F, li) != x * y.pow(p) - x.pow(p) * y)
            return false;
        for (std::uint32_t j = i + 1; j <= m; ++j) {
            MultiDegree lij(m, 0), lji(m, 0);
            lij[i - 1] = 1;
            lij[j - 1] = p;
            lji[j - 1] = 1;
            lji[i - 1] = p;
            Polynomial xi = Polynomial::x(m, F, i), xj = Polynomial::x(m, F, j);
            Polynomial u = Polynomial::u(m, F, i, j);
            if (polarize_LD(F, lij) != xi * norm(m, F, j) + u * xj.pow(p - 1))
                return false;
            if (polarize_LD(F, lji) != xj * norm(m, F, i) - u * xi.pow(p - 1))
                return false;
        }
    }
    return true;
}

bool lemma_D_holds(const PrimeField& F, std::uint32_t m)
{
    const std::uint64_t p = F.p();
    Polynomial sx(m, F), sy(m, F), sn(m, F);
    for (std::uint32_t i = 1; i <= m; ++i) {
        sx += Polynomial::x(m, F, i);
        sy += Polynomial::y(m, F, i);
        sn += norm(m, F, i);
    }
    Polynomial nabla = substitute(dickson(F).D, m, [&](VarRef v) { return v.kind == VarKind::X ? sx : sy; });
    Polynomial diff = nabla - (sn.pow(p - 1) + sx.pow(p * (p - 1)));
    // x_i -> a_i X, y_i -> a_i Y sends a monomial to a^lambda X^|x| Y^|y|.
    std::map<std::pair<MultiDegree, std::uint32_t>, Coeff> image;
    for (const auto& t : diff.terms()) {
        std::uint32_t xs = 0;
        for (std::uint32_t i = 1; i <= m; ++i)
            xs += t.monomial.x(i);
        auto& c = image[{t.monomial.multidegree(), xs}];
        c = F.add(c, t.coeff);
    }
    return std::all_of(image.begin(), image.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace modinv
