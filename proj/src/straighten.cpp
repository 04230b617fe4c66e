#include "modinv/straighten.hpp"

#include <optional>
#include <string>

namespace modinv {

std::uint32_t UProduct::degree() const
{
    std::uint32_t d = 0;
    for (auto a : x_exp)
        d += a;
    for (const auto& [e, b] : edges)
        d += 2 * b;
    return d;
}

void UProduct::add_edge(std::uint32_t i, std::uint32_t j, std::uint32_t b)
{
    if (i >= j || i < 1 || j > blocks())
        throw Error(Errc::InvalidArgument, "edge must satisfy 1 <= i < j <= m");
    if (b)
        edges[{i, j}] += b;
}

namespace {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

bool crosses(const Edge& e, const Edge& f)
{
    auto [a, b] = e;
    auto [c, d] = f;
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::optional<std::pair<Edge, Edge>> first_crossing(const UProduct& P)
{
    for (auto it = P.edges.begin(); it != P.edges.end(); ++it)
        for (auto jt = std::next(it); jt != P.edges.end(); ++jt)
            if (crosses(it->first, jt->first))
                return std::make_pair(it->first, jt->first);
    return std::nullopt;
}

void remove_edge(UProduct& P, const Edge& e)
{
    auto it = P.edges.find(e);
    if (--it->second == 0)
        P.edges.erase(it);
}

}  // namespace

bool UProduct::is_crossing_free() const
{
    return !first_crossing(*this).has_value();
}

Polynomial UProduct::expand(const PrimeField& field) const
{
    const std::size_t m = blocks();
    Monomial xs(m);
    for (std::size_t i = 1; i <= m; ++i)
        xs.set(var_index({i, VarKind::X}), x_exp[i - 1]);
    Polynomial out = Polynomial::monomial(xs, field);
    for (const auto& [e, b] : edges)
        out *= Polynomial::u(m, field, e.first, e.second).pow(b);
    return out;
}

std::string UProduct::to_string() const
{
    std::string out;
    auto sep = [&] {
        if (!out.empty())
            out += '*';
    };
    for (std::size_t i = 0; i < x_exp.size(); ++i)
        if (x_exp[i]) {
            sep();
            out += "x" + std::to_string(i + 1);
            if (x_exp[i] > 1)
                out += "^" + std::to_string(x_exp[i]);
        }
    for (const auto& [e, b] : edges) {
        sep();
        out += "u" + std::to_string(e.first) + "_" + std::to_string(e.second);
        if (b > 1)
            out += "^" + std::to_string(b);
    }
    return out.empty() ? "1" : out;
}

std::uint64_t kempe_measure(const UProduct& P)
{
    const std::uint64_t m = P.blocks();
    std::uint64_t total = 0;
    for (const auto& [e, b] : P.edges) {
        std::uint64_t t = e.second - e.first;
        total += b * t * (m - t);
    }
    return total;
}

std::vector<UncrossTerm> uncross(const UProduct& P)
{
    std::map<UProduct, std::int64_t> done;
    std::map<UProduct, std::int64_t> pending{{P, 1}};
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const UProduct& cur = node.key();
        std::int64_t c = node.mapped();
        if (c == 0)
            continue;
        auto crossing = first_crossing(cur);
        if (!crossing) {
            done[cur] += c;
            continue;
        }
        // (i,k) and (j,l) with i < j < k < l
        Edge e = crossing->first, f = crossing->second;
        if (f.first < e.first)
            std::swap(e, f);
        auto [i, k] = e;
        auto [j, l] = f;
        UProduct base = cur;
        remove_edge(base, e);
        remove_edge(base, f);
        UProduct left = base;
        left.add_edge(i, j);
        left.add_edge(k, l);
        UProduct right = base;
        right.add_edge(i, l);
        right.add_edge(j, k);
        pending[left] += c;
        pending[right] += c;
    }
    std::vector<UncrossTerm> out;
    for (auto& [prod, c] : done)
        if (c)
            out.push_back({c, prod});
    return out;
}

RelationReport verify_relations(std::uint32_t m, const PrimeField& field)
{
    RelationReport rep;
    rep.p = field.p();
    rep.m = m;
    auto x = [&](std::uint32_t i) { return Polynomial::x(m, field, i); };
    auto u = [&](std::uint32_t i, std::uint32_t j) { return Polynomial::u(m, field, i, j); };
    for (std::uint32_t i = 1; i <= m; ++i)
        for (std::uint32_t j = i + 1; j <= m; ++j)
            for (std::uint32_t k = j + 1; k <= m; ++k) {
                Polynomial rel = x(i) * u(j, k) - x(j) * u(i, k) + x(k) * u(i, j);
                if (!rel.is_zero())
                    throw Error(Errc::RelationFailed, "three-term relation failed for (" + std::to_string(i) +
                                                          "," + std::to_string(j) + "," + std::to_string(k) + ")");
                ++rep.three_term_checked;
                for (std::uint32_t l = k + 1; l <= m; ++l) {
                    Polynomial pl = u(i, j) * u(k, l) - u(i, k) * u(j, l) + u(i, l) * u(j, k);
                    if (!pl.is_zero())
                        throw Error(Errc::RelationFailed,
                                    "Pluecker relation failed for (" + std::to_string(i) + "," + std::to_string(j) +
                                        "," + std::to_string(k) + "," + std::to_string(l) + ")");
                    ++rep.plucker_checked;
                }
            }
    return rep;
}

std::uint32_t summand_length_of_product(const UProduct& P, std::uint32_t p)
{
    const std::uint32_t m = static_cast<std::uint32_t>(P.blocks());
    std::uint64_t total_x = 0;
    for (auto a : P.x_exp)
        total_x += a;
    std::uint64_t prefix_x = 0;
    for (std::uint32_t r = 1; r <= m; ++r) {
        prefix_x += P.x_exp[r - 1];
        std::uint64_t spanning = 0;
        for (const auto& [e, b] : P.edges)
            if (e.first <= r && r <= e.second)
                spanning += b;
        if (prefix_x + spanning >= p - 1)
            return p;
    }
    return static_cast<std::uint32_t>(1 + total_x);
}

}  // namespace modinv
