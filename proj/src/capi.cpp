#include "modinv/modinv.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "modinv/cpaction.hpp"
#include "modinv/fault.hpp"
#include "modinv/reports.hpp"

struct modinv_ctx {
    modinv::PrimeField field;
    std::uint32_t m;
    unsigned workers = 1;
    std::optional<double> budget;
};

struct modinv_poly {
    modinv::Polynomial value;
};

struct modinv_report {
    modinv::Json json;
    std::string text;
};

namespace {

thread_local std::string last_error;

modinv_status from_errc(modinv::Errc code)
{
    return static_cast<modinv_status>(static_cast<int>(code) + 1);
}

modinv_status fail(modinv_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

template <class Fn>
modinv_status guarded(Fn fn)
{
    try {
        return fn();
    } catch (const modinv::Error& e) {
        return fail(from_errc(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(MODINV_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(MODINV_E_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

modinv_status null_arg(const char* what)
{
    return fail(MODINV_E_NULL_ARGUMENT, std::string(what) + " is null");
}

modinv_status wrap_poly(modinv::Polynomial value, modinv_poly** out)
{
    *out = new modinv_poly{std::move(value)};
    return MODINV_OK;
}

modinv_status wrap_report(modinv::Json json, modinv_report** out)
{
    auto* r = new modinv_report{std::move(json), {}};
    r->text = r->json.dump();
    *out = r;
    return MODINV_OK;
}

}  // namespace

extern "C" {

const char* modinv_version(void)
{
    return "0.1.0";
}

const char* modinv_status_name(modinv_status status)
{
    switch (status) {
    case MODINV_OK: return "OK";
    case MODINV_E_NULL_ARGUMENT: return "NullArgument";
    case MODINV_E_INTERNAL: return "Internal";
    default:
        if (status > MODINV_OK && status < MODINV_E_NULL_ARGUMENT)
            return modinv::errc_name(static_cast<modinv::Errc>(status - 1));
        return "Unknown";
    }
}

const char* modinv_last_error(void)
{
    return last_error.c_str();
}

void modinv_string_free(char* s)
{
    std::free(s);
}

modinv_status modinv_set_fault(const char* name)
{
    if (!name)
        return null_arg("name");
    return guarded([&] {
        modinv::fault::set(name);
        return MODINV_OK;
    });
}

modinv_status modinv_ctx_create(uint32_t p, uint32_t m, modinv_ctx** out)
{
    if (!out)
        return null_arg("out");
    return guarded([&] {
        modinv::PrimeField field(p);
        if (m == 0)
            return fail(MODINV_E_INVALID_ARGUMENT, "m must be at least 1");
        *out = new modinv_ctx{field, m, 1, std::nullopt};
        return MODINV_OK;
    });
}

void modinv_ctx_destroy(modinv_ctx* ctx)
{
    delete ctx;
}

modinv_status modinv_ctx_set_workers(modinv_ctx* ctx, unsigned workers)
{
    if (!ctx)
        return null_arg("ctx");
    ctx->workers = workers == 0 ? 1 : workers;
    return MODINV_OK;
}

modinv_status modinv_ctx_set_budget(modinv_ctx* ctx, double seconds)
{
    if (!ctx)
        return null_arg("ctx");
    ctx->budget = seconds > 0 ? std::optional<double>(seconds) : std::nullopt;
    return MODINV_OK;
}

modinv_status modinv_poly_parse(const modinv_ctx* ctx, const char* text, modinv_poly** out)
{
    if (!ctx || !text || !out)
        return null_arg(!ctx ? "ctx" : !text ? "text" : "out");
    return guarded([&] { return wrap_poly(modinv::Polynomial::parse(text, ctx->m, ctx->field), out); });
}

void modinv_poly_destroy(modinv_poly* poly)
{
    delete poly;
}

modinv_status modinv_poly_to_string(const modinv_poly* poly, char** out)
{
    if (!poly || !out)
        return null_arg(!poly ? "poly" : "out");
    return guarded([&] {
        *out = dup_string(poly->value.to_string());
        return MODINV_OK;
    });
}

modinv_status modinv_poly_equal(const modinv_poly* a, const modinv_poly* b, int* out)
{
    if (!a || !b || !out)
        return null_arg(!a ? "a" : !b ? "b" : "out");
    return guarded([&] {
        if (a->value.field() != b->value.field())
            return fail(MODINV_E_MODULUS_MISMATCH, "polynomials live over different fields");
        *out = a->value.blocks() == b->value.blocks() && a->value == b->value;
        return MODINV_OK;
    });
}

modinv_status modinv_poly_transfer(const modinv_poly* poly, modinv_poly** out)
{
    if (!poly || !out)
        return null_arg(!poly ? "poly" : "out");
    return guarded([&] { return wrap_poly(modinv::transfer(poly->value), out); });
}

modinv_status modinv_poly_sigma(const modinv_poly* poly, uint32_t k, modinv_poly** out)
{
    if (!poly || !out)
        return null_arg(!poly ? "poly" : "out");
    return guarded([&] { return wrap_poly(modinv::apply_sigma(poly->value, k), out); });
}

modinv_status modinv_poly_norm(const modinv_ctx* ctx, uint32_t i, modinv_poly** out)
{
    if (!ctx || !out)
        return null_arg(!ctx ? "ctx" : "out");
    if (i == 0 || i > ctx->m)
        return fail(MODINV_E_INVALID_ARGUMENT, "block index out of range");
    return guarded([&] { return wrap_poly(modinv::norm(ctx->m, ctx->field, i), out); });
}

modinv_status modinv_poly_is_invariant(const modinv_poly* poly, int* out)
{
    if (!poly || !out)
        return null_arg(!poly ? "poly" : "out");
    return guarded([&] {
        *out = modinv::is_invariant(poly->value);
        return MODINV_OK;
    });
}

modinv_status modinv_poly_length(const modinv_poly* poly, uint32_t* out)
{
    if (!poly || !out)
        return null_arg(!poly ? "poly" : "out");
    return guarded([&] {
        *out = modinv::length(poly->value);
        return MODINV_OK;
    });
}

modinv_status modinv_poly_lead(const modinv_poly* poly, char** out)
{
    if (!poly || !out)
        return null_arg(!poly ? "poly" : "out");
    return guarded([&] {
        *out = dup_string(poly->value.lead_monomial().to_string());
        return MODINV_OK;
    });
}

modinv_status modinv_report_counts(const modinv_ctx* ctx, uint32_t d_max, modinv_report** out)
{
    if (!ctx || !out)
        return null_arg(!ctx ? "ctx" : "out");
    return guarded([&] { return wrap_report(modinv::counts_report(ctx->field.p(), d_max), out); });
}

modinv_status modinv_report_paths(const modinv_ctx* ctx, uint32_t d, modinv_report** out)
{
    if (!ctx || !out)
        return null_arg(!ctx ? "ctx" : "out");
    return guarded([&] { return wrap_report(modinv::paths_report(ctx->field.p(), d), out); });
}

modinv_status modinv_report_tensor(const modinv_ctx* ctx, uint32_t d, modinv_report** out)
{
    if (!ctx || !out)
        return null_arg(!ctx ? "ctx" : "out");
    return guarded([&] { return wrap_report(modinv::tensor_report(ctx->field.p(), d, ctx->workers), out); });
}

modinv_status modinv_report_decompose(const modinv_ctx* ctx, const uint32_t* lambda, size_t blocks,
                                      modinv_decompose_method method, modinv_report** out)
{
    if (!ctx || !lambda || !out)
        return null_arg(!ctx ? "ctx" : !lambda ? "lambda" : "out");
    modinv::DecomposeMethod how;
    switch (method) {
    case MODINV_DECOMPOSE_RANKS: how = modinv::DecomposeMethod::Ranks; break;
    case MODINV_DECOMPOSE_PATHS: how = modinv::DecomposeMethod::Paths; break;
    case MODINV_DECOMPOSE_BOTH: how = modinv::DecomposeMethod::Both; break;
    default: return fail(MODINV_E_INVALID_ARGUMENT, "unknown decomposition method");
    }
    return guarded([&] {
        modinv::MultiDegree lam(lambda, lambda + blocks);
        return wrap_report(modinv::decompose_report(ctx->field.p(), lam, how), out);
    });
}

modinv_status modinv_report_sagbi(const modinv_ctx* ctx, uint32_t d_max, modinv_variant variant, modinv_report** out)
{
    if (!ctx || !out)
        return null_arg(!ctx ? "ctx" : "out");
    if (variant != MODINV_VARIANT_FULL && variant != MODINV_VARIANT_MINIMAL)
        return fail(MODINV_E_INVALID_ARGUMENT, "unknown generator variant");
    auto v = variant == MODINV_VARIANT_FULL ? modinv::Variant::Full : modinv::Variant::Minimal;
    return guarded([&] { return wrap_report(modinv::sagbi_report(ctx->field.p(), ctx->m, d_max, v, ctx->workers), out); });
}

modinv_status modinv_report_sl2(const modinv_ctx* ctx, uint32_t d_max, int membership, modinv_report** out)
{
    if (!ctx || !out)
        return null_arg(!ctx ? "ctx" : "out");
    modinv::SL2Options opts;
    opts.workers = ctx->workers;
    opts.budget_secs = ctx->budget;
    return guarded([&] {
        return wrap_report(modinv::sl2_report(ctx->field.p(), ctx->m, d_max, opts, membership != 0), out);
    });
}

modinv_status modinv_report_selftest(modinv_selftest_level level, uint64_t seed, modinv_report** out)
{
    if (!out)
        return null_arg("out");
    if (level != MODINV_SELFTEST_QUICK && level != MODINV_SELFTEST_FULL)
        return fail(MODINV_E_INVALID_ARGUMENT, "unknown self-test level");
    auto lv = level == MODINV_SELFTEST_QUICK ? modinv::SelftestLevel::Quick : modinv::SelftestLevel::Full;
    return guarded([&] { return wrap_report(modinv::selftest_report(lv, seed), out); });
}

const char* modinv_report_json(const modinv_report* report)
{
    return report ? report->text.c_str() : nullptr;
}

int modinv_report_passed(const modinv_report* report)
{
    return report && modinv::report_passed(report->json);
}

void modinv_report_destroy(modinv_report* report)
{
    delete report;
}

}  // extern "C"
