#include "modinv/polarize.hpp"

#include <algorithm>
#include <numeric>

#include "modinv/component.hpp"
#include "modinv/paths.hpp"

namespace modinv {

BlockSplit::BlockSplit(MultiDegree sizes) : sizes_(std::move(sizes))
{
    std::size_t off = 0;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        offsets_.push_back(off);
        for (std::uint32_t j = 0; j < sizes_[i]; ++j)
            provenance_.push_back(i + 1);
        off += sizes_[i];
    }
}

namespace {

Coeff factorial_mod(std::uint64_t n, const PrimeField& F)
{
    Coeff out = 1 % F.p();
    for (std::uint64_t k = 2; k <= n; ++k)
        out = F.mul(out, F.reduce(k));
    return out;
}

void check_source(const Polynomial& f, const BlockSplit& split)
{
    if (f.blocks() != split.source_blocks())
        throw Error(Errc::DimensionMismatch, "polynomial and split disagree on the number of blocks");
}

}  // namespace

Coeff multinomial_mod(const std::vector<std::uint64_t>& parts, const PrimeField& F)
{
    const std::uint64_t p = F.p();
    std::vector<std::uint64_t> rest = parts;
    std::uint64_t n = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
    Coeff out = 1 % F.p();
    while (n > 0) {
        std::uint64_t nd = n % p, sum = 0;
        Coeff denom = 1;
        for (auto& k : rest) {
            std::uint64_t kd = k % p;
            sum += kd;
            denom = F.mul(denom, factorial_mod(kd, F));
            k /= p;
        }
        if (sum != nd)
            return 0;
        out = F.mul(out, F.div(factorial_mod(nd, F), denom));
        n /= p;
    }
    return out;
}

Polynomial nabla_project(const Polynomial& f, const BlockSplit& split, const MultiDegree& mu)
{
    check_source(f, split);
    if (mu.size() != split.target_blocks())
        throw Error(Errc::DimensionMismatch, "target multidegree has the wrong number of blocks");
    const PrimeField& F = f.field();
    const std::size_t m = split.source_blocks();
    const std::size_t n = split.target_blocks();
    std::vector<Term> out;

    for (const auto& term : f.terms()) {
        const Monomial& mon = term.monomial;
        bool feasible = true;
        for (std::size_t i = 1; i <= m && feasible; ++i) {
            std::uint64_t run = 0;
            for (std::size_t j = 1; j <= split.sizes()[i - 1]; ++j)
                run += mu[split.target(i, j) - 1];
            feasible = run == std::uint64_t{mon.x(i)} + mon.y(i);
        }
        if (!feasible)
            continue;

        // Choose the x-exponent of every target block in turn; the y-exponent
        // is then mu_t minus it.
        std::vector<std::uint32_t> ax(n, 0);
        auto emit = [&] {
            Monomial img(n);
            Coeff c = term.coeff;
            for (std::size_t i = 1; i <= m && c; ++i) {
                std::vector<std::uint64_t> xs, ys;
                for (std::size_t j = 1; j <= split.sizes()[i - 1]; ++j) {
                    std::size_t t = split.target(i, j);
                    xs.push_back(ax[t - 1]);
                    ys.push_back(mu[t - 1] - ax[t - 1]);
                }
                c = F.mul(c, F.mul(multinomial_mod(xs, F), multinomial_mod(ys, F)));
            }
            if (!c)
                return;
            for (std::size_t t = 1; t <= n; ++t) {
                img.set(var_index({t, VarKind::X}), ax[t - 1]);
                img.set(var_index({t, VarKind::Y}), mu[t - 1] - ax[t - 1]);
            }
            out.push_back({img, c});
        };
        // remaining[i] = x-exponent of source block i not yet assigned
        std::vector<std::uint32_t> remaining(m);
        for (std::size_t i = 1; i <= m; ++i)
            remaining[i - 1] = mon.x(i);
        auto rec = [&](auto&& self, std::size_t t) -> void {
            if (t > n) {
                emit();
                return;
            }
            std::size_t i = split.source_of(t);
            bool last_in_run = t == split.offset(i) + split.sizes()[i - 1];
            std::uint32_t lo = 0, hi = std::min(mu[t - 1], remaining[i - 1]);
            if (last_in_run) {
                if (remaining[i - 1] > mu[t - 1])
                    return;
                lo = hi = remaining[i - 1];
            }
            for (std::uint32_t a = lo; a <= hi; ++a) {
                ax[t - 1] = a;
                remaining[i - 1] -= a;
                self(self, t + 1);
                remaining[i - 1] += a;
            }
        };
        rec(rec, 1);
    }
    return Polynomial::from_terms(n, F, std::move(out));
}

namespace {

void check_multidegree(const Polynomial& f, const MultiDegree& lambda)
{
    if (f.blocks() != lambda.size())
        throw Error(Errc::DimensionMismatch, "multidegree has the wrong number of blocks");
    if (f.is_zero())
        return;
    if (!f.is_multihomogeneous() || f.multidegree() != lambda)
        throw Error(Errc::NotMultihomogeneous, "polynomial is not of multidegree " + to_string(lambda));
}

}  // namespace

Polynomial polarize_full(const Polynomial& f, const MultiDegree& lambda)
{
    check_multidegree(f, lambda);
    const PrimeField& F = f.field();
    BlockSplit split(lambda);
    const std::size_t m = lambda.size();
    const std::size_t n = split.target_blocks();
    std::vector<Term> out;
    for (const auto& term : f.terms()) {
        const Monomial& mon = term.monomial;
        Coeff c = term.coeff;
        for (std::size_t i = 1; i <= m; ++i)
            c = F.mul(c, F.mul(factorial_mod(mon.x(i), F), factorial_mod(mon.y(i), F)));
        if (!c)
            continue;
        // chosen[i-1] marks which split blocks of source i carry an x
        std::vector<std::vector<bool>> chosen(m);
        for (std::size_t i = 1; i <= m; ++i) {
            chosen[i - 1].assign(lambda[i - 1], false);
            std::fill(chosen[i - 1].begin(), chosen[i - 1].begin() + mon.x(i), true);
        }
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i > m) {
                Monomial img(n);
                for (std::size_t s = 1; s <= m; ++s)
                    for (std::size_t j = 1; j <= lambda[s - 1]; ++j)
                        img.set(var_index({split.target(s, j), chosen[s - 1][j - 1] ? VarKind::X : VarKind::Y}), 1);
                out.push_back({img, c});
                return;
            }
            auto& sel = chosen[i - 1];
            // prev_permutation from the sorted-descending start visits every subset once
            do
                self(self, i + 1);
            while (std::prev_permutation(sel.begin(), sel.end()));
        };
        rec(rec, 1);
    }
    return Polynomial::from_terms(n, F, std::move(out));
}

Polynomial polarize_by_substitution(const Polynomial& f, const MultiDegree& lambda)
{
    check_multidegree(f, lambda);
    BlockSplit split(lambda);
    const std::size_t n = split.target_blocks();
    const PrimeField& F = f.field();
    Polynomial expanded = substitute(f, n, [&](VarRef v) {
        Polynomial s(n, F);
        for (std::size_t j = 1; j <= lambda[v.block - 1]; ++j)
            s += Polynomial::variable(n, F, {split.target(v.block, j), v.kind});
        return s;
    });
    return expanded.project(MultiDegree(n, 1));
}

Polynomial restitute(const Polynomial& F, const BlockSplit& split)
{
    if (F.blocks() != split.target_blocks())
        throw Error(Errc::DimensionMismatch, "polynomial does not live in the split ring");
    const std::size_t m = split.source_blocks();
    std::vector<Term> out;
    out.reserve(F.size());
    for (const auto& term : F.terms()) {
        Monomial img(m);
        std::vector<std::uint32_t> e(2 * m, 0);
        for (std::size_t t = 1; t <= F.blocks(); ++t) {
            std::size_t i = split.source_of(t);
            e[var_index({i, VarKind::X})] += term.monomial.x(t);
            e[var_index({i, VarKind::Y})] += term.monomial.y(t);
        }
        out.push_back({Monomial(std::move(e)), term.coeff});
    }
    return Polynomial::from_terms(m, F.field(), std::move(out));
}

Polynomial permute_blocks(const Polynomial& F, const std::vector<std::size_t>& perm)
{
    const std::size_t n = F.blocks();
    if (perm.size() != n)
        throw Error(Errc::DimensionMismatch, "permutation has the wrong size");
    std::vector<Term> out;
    out.reserve(F.size());
    for (const auto& term : F.terms()) {
        std::vector<std::uint32_t> e(2 * n, 0);
        for (std::size_t t = 1; t <= n; ++t) {
            e[var_index({perm[t - 1], VarKind::X})] = term.monomial.x(t);
            e[var_index({perm[t - 1], VarKind::Y})] = term.monomial.y(t);
        }
        out.push_back({Monomial(std::move(e)), term.coeff});
    }
    return Polynomial::from_terms(n, F.field(), std::move(out));
}

Polynomial young_symmetrize(const Polynomial& F, const BlockSplit& split)
{
    if (F.blocks() != split.target_blocks())
        throw Error(Errc::DimensionMismatch, "polynomial does not live in the split ring");
    const std::size_t n = split.target_blocks();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    Polynomial out(n, F.field());
    // odometer over the runs, each cycling through its permutations
    for (;;) {
        out += permute_blocks(F, perm);
        std::size_t i = split.source_blocks();
        for (; i >= 1; --i) {
            auto first = perm.begin() + static_cast<std::ptrdiff_t>(split.offset(i));
            auto last = first + split.sizes()[i - 1];
            if (std::next_permutation(first, last))
                break;
        }
        if (i == 0)
            break;
    }
    return out;
}

ModuleDecomposition decompose_via_paths(const MultiDegree& lambda, const PrimeField& field)
{
    const std::uint32_t p = field.p();
    PeriodicityResult red = periodicity_reduce(lambda, p);
    ModuleDecomposition out{p, std::vector<std::uint64_t>(p, 0)};
    out.multiplicities[p - 1] += red.projective_count;
    const std::uint64_t d = total_degree(red.reduced);
    if (d == 0) {
        // F[mV_2]_0 is the constants
        out.multiplicities[0] += 1;
        return out;
    }
    BlockSplit split(red.reduced);
    Component comp(red.reduced);
    std::vector<std::vector<std::vector<Coeff>>> by_dim(p + 1);
    for (const auto& cp : enumerate_paths(static_cast<std::uint32_t>(d), p)) {
        Polynomial image = restitute(young_symmetrize(theta(cp.path, field), split), split);
        by_dim[cp.cls.summand_dimension(p)].push_back(comp.to_dense(image));
    }
    EchelonBasis span(comp.dim(), field);
    std::size_t above = 0;
    for (std::uint32_t h = p; h >= 1; --h) {
        for (auto& v : by_dim[h])
            span.insert(std::move(v));
        out.multiplicities[h - 1] += span.size() - above;
        above = span.size();
    }
    return out;
}

}  // namespace modinv
