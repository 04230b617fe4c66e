#include "modinv/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <unordered_map>

namespace modinv {

std::uint64_t total_degree(const MultiDegree& lambda) noexcept
{
    return std::accumulate(lambda.begin(), lambda.end(), std::uint64_t{0});
}

std::uint64_t component_dimension(const MultiDegree& lambda) noexcept
{
    std::uint64_t n = 1;
    for (auto l : lambda)
        n *= l + 1;
    return n;
}

std::string to_string(const MultiDegree& lambda)
{
    std::string out;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(lambda[i]);
    }
    return out;
}

MultiDegree parse_multidegree(std::string_view text)
{
    MultiDegree out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view part = text.substr(pos, comma - pos);
        while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front())))
            part.remove_prefix(1);
        while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back())))
            part.remove_suffix(1);
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
            throw Error(Errc::Parse, "bad multidegree '" + std::string(text) + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    if (out.empty())
        throw Error(Errc::Parse, "empty multidegree");
    return out;
}

// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps))
{
    if (exps_.size() % 2 != 0)
        throw Error(Errc::DimensionMismatch, "exponent vector must have even length");
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t blocks, VarRef v, std::uint32_t e)
{
    if (v.block < 1 || v.block > blocks)
        throw Error(Errc::InvalidArgument, "variable block out of range");
    Monomial m(blocks);
    m.set(var_index(v), e);
    return m;
}

MultiDegree Monomial::multidegree() const
{
    MultiDegree out(blocks());
    for (std::size_t b = 0; b < out.size(); ++b)
        out[b] = exps_[2 * b] + exps_[2 * b + 1];
    return out;
}

void Monomial::set(std::size_t idx, std::uint32_t e)
{
    degree_ = degree_ - exps_[idx] + e;
    exps_[idx] = e;
}

bool Monomial::divides(const Monomial& other) const
{
    if (other.exps_.size() != exps_.size())
        throw Error(Errc::DimensionMismatch, "monomials in different rings");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::cofactor(const Monomial& other) const
{
    if (!divides(other))
        throw Error(Errc::InvalidArgument, "monomial does not divide");
    Monomial out(blocks());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out.exps_[i] = other.exps_[i] - exps_[i];
    out.degree_ = other.degree_ - degree_;
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    if (a.exps_.size() != b.exps_.size())
        throw Error(Errc::DimensionMismatch, "monomials in different rings");
    Monomial out(a.blocks());
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        out.exps_[i] = a.exps_[i] + b.exps_[i];
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

std::string Monomial::to_string() const
{
    std::string out;
    auto emit = [&](char name, std::size_t block, std::uint32_t e) {
        if (e == 0)
            return;
        if (!out.empty())
            out += '*';
        out += name;
        out += std::to_string(block);
        if (e > 1)
            out += '^' + std::to_string(e);
    };
    for (std::size_t b = 1; b <= blocks(); ++b)
        emit('x', b, x(b));
    for (std::size_t b = 1; b <= blocks(); ++b)
        emit('y', b, y(b));
    return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exponents()) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b)
{
    if (a.blocks() != b.blocks())
        throw Error(Errc::DimensionMismatch, "grevlex comparison of monomials in different rings");
    if (a.degree() != b.degree())
        return a.degree() <=> b.degree();
    auto ea = a.exponents();
    auto eb = b.exponents();
    for (std::size_t i = ea.size(); i-- > 0;) {
        if (ea[i] != eb[i])
            return ea[i] < eb[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t blocks, const PrimeField& field, std::int64_t c)
{
    Polynomial f(blocks, field);
    Coeff r = field.reduce(c);
    if (r)
        f.terms_.push_back({Monomial(blocks), r});
    return f;
}

Polynomial Polynomial::variable(std::size_t blocks, const PrimeField& field, VarRef v)
{
    return monomial(Monomial::variable(blocks, v), field);
}

Polynomial Polynomial::x(std::size_t blocks, const PrimeField& field, std::size_t block)
{
    return variable(blocks, field, {block, VarKind::X});
}

Polynomial Polynomial::y(std::size_t blocks, const PrimeField& field, std::size_t block)
{
    return variable(blocks, field, {block, VarKind::Y});
}

Polynomial Polynomial::monomial(const Monomial& mon, const PrimeField& field, Coeff c)
{
    Polynomial f(mon.blocks(), field);
    c %= field.p();
    if (c)
        f.terms_.push_back({mon, c});
    return f;
}

Polynomial Polynomial::u(std::size_t blocks, const PrimeField& field, std::size_t i, std::size_t j)
{
    return x(blocks, field, i) * y(blocks, field, j) - x(blocks, field, j) * y(blocks, field, i);
}

Polynomial Polynomial::from_terms(std::size_t blocks, const PrimeField& field, std::vector<Term> terms)
{
    Polynomial f(blocks, field);
    for (const auto& t : terms)
        if (t.monomial.blocks() != blocks)
            throw Error(Errc::DimensionMismatch, "term from a different ring");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return GrevlexGreater{}(a.monomial, b.monomial); });
    for (auto& t : terms) {
        Coeff c = t.coeff % field.p();
        if (!f.terms_.empty() && f.terms_.back().monomial == t.monomial) {
            f.terms_.back().coeff = field.add(f.terms_.back().coeff, c);
            if (f.terms_.back().coeff == 0)
                f.terms_.pop_back();
        } else if (c) {
            f.terms_.push_back({std::move(t.monomial), c});
        }
    }
    return f;
}

const Term& Polynomial::lead() const
{
    if (terms_.empty())
        throw Error(Errc::ZeroPolynomial, "the zero polynomial has no lead term");
    return terms_.front();
}

Coeff Polynomial::coefficient(const Monomial& mon) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mon, [](const Term& t, const Monomial& m) {
        return GrevlexGreater{}(t.monomial, m);
    });
    return (it != terms_.end() && it->monomial == mon) ? it->coeff : 0;
}

bool Polynomial::is_multihomogeneous() const
{
    if (terms_.empty())
        return true;
    MultiDegree first = terms_.front().monomial.multidegree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.monomial.multidegree() == first; });
}

MultiDegree Polynomial::multidegree() const
{
    if (terms_.empty() || !is_multihomogeneous())
        throw Error(Errc::NotMultihomogeneous, "polynomial is not multihomogeneous");
    return terms_.front().monomial.multidegree();
}

Polynomial Polynomial::project(const MultiDegree& lambda) const
{
    if (lambda.size() != blocks_)
        throw Error(Errc::DimensionMismatch, "multidegree has the wrong number of blocks");
    Polynomial out(blocks_, field_);
    for (const auto& t : terms_)
        if (t.monomial.multidegree() == lambda)
            out.terms_.push_back(t);
    return out;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& t : out.terms_)
        t.coeff = field_.neg(t.coeff);
    return out;
}

Polynomial Polynomial::scaled(Coeff c) const
{
    c %= field_.p();
    Polynomial out(blocks_, field_);
    if (c == 0)
        return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_)
        t.coeff = field_.mul(t.coeff, c);
    return out;
}

Polynomial Polynomial::monic() const
{
    return scaled(field_.inv(lead().coeff));
}

Polynomial Polynomial::pow(std::uint64_t e) const
{
    Polynomial result = constant(blocks_, field_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::times_monomial(const Monomial& mon, Coeff c) const
{
    Polynomial out(blocks_, field_);
    c %= field_.p();
    if (c == 0)
        return out;
    out.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the order.
    for (const auto& t : terms_)
        out.terms_.push_back({t.monomial * mon, field_.mul(t.coeff, c)});
    return out;
}

void Polynomial::check_compatible(const Polynomial& g) const
{
    if (blocks_ != g.blocks_)
        throw Error(Errc::DimensionMismatch, "polynomials in rings with different block counts");
    if (field_ != g.field_)
        throw Error(Errc::ModulusMismatch, "polynomials over different fields");
}

namespace {

Polynomial merge(const Polynomial& f, const Polynomial& g, bool subtract)
{
    const PrimeField& F = f.field();
    std::vector<Term> out;
    out.reserve(f.size() + g.size());
    auto a = f.terms().begin(), ae = f.terms().end();
    auto b = g.terms().begin(), be = g.terms().end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && GrevlexGreater{}(a->monomial, b->monomial))) {
            out.push_back(*a++);
        } else if (a == ae || GrevlexGreater{}(b->monomial, a->monomial)) {
            out.push_back({b->monomial, subtract ? F.neg(b->coeff) : b->coeff});
            ++b;
        } else {
            Coeff c = subtract ? F.sub(a->coeff, b->coeff) : F.add(a->coeff, b->coeff);
            if (c)
                out.push_back({a->monomial, c});
            ++a;
            ++b;
        }
    }
    return Polynomial::from_terms(f.blocks(), F, std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& f, const Polynomial& g)
{
    f.check_compatible(g);
    return merge(f, g, false);
}

Polynomial operator-(const Polynomial& f, const Polynomial& g)
{
    f.check_compatible(g);
    return merge(f, g, true);
}

Polynomial operator*(const Polynomial& f, const Polynomial& g)
{
    f.check_compatible(g);
    const PrimeField& F = f.field_;
    if (f.is_zero() || g.is_zero())
        return Polynomial(f.blocks_, F);
    if (g.size() == 1)
        return f.times_monomial(g.terms_[0].monomial, g.terms_[0].coeff);
    if (f.size() == 1)
        return g.times_monomial(f.terms_[0].monomial, f.terms_[0].coeff);
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(f.size() * g.size());
    for (const auto& a : f.terms_)
        for (const auto& b : g.terms_) {
            Coeff& slot = acc[a.monomial * b.monomial];
            slot = F.add(slot, F.mul(a.coeff, b.coeff));
        }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [mon, c] : acc)
        if (c)
            terms.push_back({mon, c});
    return Polynomial::from_terms(f.blocks_, F, std::move(terms));
}

bool operator==(const Polynomial& f, const Polynomial& g)
{
    return f.blocks_ == g.blocks_ && f.field_ == g.field_ && f.terms_ == g.terms_;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    const std::uint32_t p = field_.p();
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        bool negative = p > 2 && t.coeff > p / 2;
        Coeff mag = negative ? p - t.coeff : t.coeff;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (t.monomial.is_one()) {
            out += std::to_string(mag);
        } else {
            if (mag != 1)
                out += std::to_string(mag) + "*";
            out += t.monomial.to_string();
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t blocks, const PrimeField& field)
        : text_(text), blocks_(blocks), field_(field)
    {
    }

    Polynomial parse()
    {
        std::vector<Term> terms;
        skip_ws();
        if (at_end())
            fail("empty input");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = get() == '-';
            skip_ws();
        }
        terms.push_back(term(negative));
        skip_ws();
        while (!at_end()) {
            char op = get();
            if (op != '+' && op != '-')
                fail("expected '+' or '-'");
            skip_ws();
            terms.push_back(term(op == '-'));
            skip_ws();
        }
        return Polynomial::from_terms(blocks_, field_, std::move(terms));
    }

private:
    Term term(bool negative)
    {
        Coeff coeff = 1;
        Monomial mon(blocks_);
        bool any = false;
        for (;;) {
            skip_ws();
            if (at_end())
                fail("unexpected end of input");
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = field_.mul(coeff, field_.reduce(static_cast<std::int64_t>(number() % field_.p())));
            } else if (c == 'x' || c == 'y') {
                get();
                std::uint64_t block = number();
                if (block < 1 || block > blocks_)
                    fail("variable index out of range");
                std::uint64_t e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    get();
                    skip_ws();
                    e = number();
                }
                std::size_t idx = var_index({static_cast<std::size_t>(block), c == 'x' ? VarKind::X : VarKind::Y});
                mon.set(idx, mon[idx] + static_cast<std::uint32_t>(e));
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            any = true;
            skip_ws();
            if (at_end() || peek() != '*')
                break;
            get();
        }
        if (!any)
            fail("empty term");
        return {mon, negative ? field_.neg(coeff) : coeff};
    }

    std::uint64_t number()
    {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc())
            fail("number out of range");
        (void)ptr;
        return v;
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& why) const
    {
        throw Error(Errc::Parse, "cannot parse polynomial at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t blocks_;
    PrimeField field_;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::size_t blocks, const PrimeField& field)
{
    std::string_view trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.remove_prefix(1);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.remove_suffix(1);
    if (trimmed == "0")
        return Polynomial(blocks, field);
    return PolyParser(trimmed, blocks, field).parse();
}

// ---------------------------------------------------------------------------

Polynomial substitute(const Polynomial& f, std::size_t target_blocks,
                      const std::function<Polynomial(VarRef)>& image)
{
    const PrimeField& F = f.field();
    const std::size_t nvars = 2 * f.blocks();
    // powers[v][e] = image(v)^e, filled lazily
    std::vector<std::vector<Polynomial>> powers(nvars);
    auto power = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) {
            cache.push_back(Polynomial::constant(target_blocks, F, 1));
            VarRef ref{v / 2 + 1, v % 2 ? VarKind::X : VarKind::Y};
            Polynomial img = image(ref);
            if (img.blocks() != target_blocks)
                throw Error(Errc::DimensionMismatch, "substitution image lives in the wrong ring");
            cache.push_back(std::move(img));
        }
        while (cache.size() <= e)
            cache.push_back(cache.back() * cache[1]);
        return cache[e];
    };
    Polynomial out(target_blocks, F);
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target_blocks, F, t.coeff);
        for (std::size_t v = 0; v < nvars && !prod.is_zero(); ++v)
            if (t.monomial[v])
                prod = prod * power(v, t.monomial[v]);
        out += prod;
    }
    return out;
}

Polynomial apply_block_linear(const Polynomial& f, const BlockLinearMap& g)
{
    const std::size_t m = f.blocks();
    const PrimeField& F = f.field();
    return substitute(f, m, [&](VarRef v) {
        Polynomial xv = Polynomial::x(m, F, v.block);
        Polynomial yv = Polynomial::y(m, F, v.block);
        if (v.kind == VarKind::X)
            return xv.scaled(g.g11) + yv.scaled(g.g21);
        return xv.scaled(g.g12) + yv.scaled(g.g22);
    });
}

}  // namespace modinv
