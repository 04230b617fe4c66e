// modinv: command-line front end over the libmodinv C API.
//
// Exit codes: 0 success, 1 usage error or exhausted budget, 2 failed check.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modinv/modinv.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

struct Options {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t d = 0;
    std::uint32_t dmax = 0;
    std::string multidegree;
    std::string method = "ranks";
    std::string variant = "minimal";
    std::string level = "quick";
    std::string format = "json";
    std::uint64_t seed = 20240917;
    unsigned workers = 1;
    double budget = 0;
    bool membership = false;
    std::string fault;
};

using ReportPtr = std::unique_ptr<modinv_report, decltype(&modinv_report_destroy)>;
using CtxPtr = std::unique_ptr<modinv_ctx, decltype(&modinv_ctx_destroy)>;

struct CallError {
    modinv_status status;
    std::string message;
};

void check(modinv_status status)
{
    if (status != MODINV_OK)
        throw CallError{status, modinv_last_error()};
}

CtxPtr make_ctx(const Options& o, std::uint32_t m)
{
    modinv_ctx* raw = nullptr;
    check(modinv_ctx_create(o.p, m, &raw));
    CtxPtr ctx(raw, &modinv_ctx_destroy);
    check(modinv_ctx_set_workers(ctx.get(), o.workers));
    check(modinv_ctx_set_budget(ctx.get(), o.budget));
    return ctx;
}

std::vector<std::uint32_t> parse_multidegree(const std::string& text)
{
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (part.empty() || used != part.size() || part[0] == '-' || v > 0xffffffffUL)
            throw CLI::ValidationError("--multidegree", "expected comma-separated non-negative integers");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    if (out.empty())
        throw CLI::ValidationError("--multidegree", "must not be empty");
    return out;
}

std::string scalar_text(const Json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void render_rows(std::ostream& os, const Json& rows, std::uint32_t first_column)
{
    // array of arrays: one line per row, prefixed by its index
    std::size_t width = 0;
    for (const auto& row : rows)
        for (const auto& v : row)
            width = std::max(width, v.dump().size());
    width = std::max<std::size_t>(width, 3) + 1;
    if (!rows.empty()) {
        os << "  d   ";
        for (std::size_t c = 0; c < rows.front().size(); ++c) {
            std::string h = "h=" + std::to_string(c + first_column);
            os << std::string(width > h.size() ? width - h.size() : 1, ' ') << h;
        }
        os << '\n';
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::string idx = std::to_string(r);
        os << "  " << idx << std::string(idx.size() < 4 ? 4 - idx.size() : 1, ' ');
        for (const auto& v : rows[r]) {
            std::string s = v.dump();
            os << std::string(width > s.size() ? width - s.size() : 1, ' ') << s;
        }
        os << '\n';
    }
}

void render_table(std::ostream& os, const Json& report)
{
    for (const auto& [key, value] : report.items()) {
        if (value.is_array() && !value.empty() && value.front().is_array()) {
            os << key << ":\n";
            render_rows(os, value, key == "mu" ? 1 : 0);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            os << key << ":\n";
            for (const auto& row : value) {
                os << " ";
                for (const auto& [k, v] : row.items())
                    os << ' ' << k << '=' << scalar_text(v);
                os << '\n';
            }
        } else if (value.is_object()) {
            os << key << ":\n";
            for (const auto& [k, v] : value.items())
                os << "  " << k << ": " << scalar_text(v) << '\n';
        } else {
            os << key << ": " << scalar_text(value) << '\n';
        }
    }
}

int emit(const ReportPtr& report, const Options& o, const std::string& subcommand)
{
    const char* text = modinv_report_json(report.get());
    if (o.format == "table")
        render_table(std::cout, Json::parse(text));
    else
        std::cout << text << '\n';
    std::cout.flush();
    if (modinv_report_passed(report.get()))
        return kExitOk;
    std::string detail;
    if (subcommand == "selftest") {
        Json parsed = Json::parse(text);
        for (const auto& name : parsed["failed"])
            detail += (detail.empty() ? "" : ", ") + name.get<std::string>();
        std::cerr << "modinv selftest: failed: " << detail << '\n';
    } else {
        std::cerr << "modinv " << subcommand << ": verification failed\n";
    }
    return kExitFailed;
}

ReportPtr run(const std::string& sub, const Options& o)
{
    modinv_report* raw = nullptr;
    if (sub == "selftest") {
        auto level = o.level == "full" ? MODINV_SELFTEST_FULL : MODINV_SELFTEST_QUICK;
        check(modinv_report_selftest(level, o.seed, &raw));
        return ReportPtr(raw, &modinv_report_destroy);
    }
    if (sub == "counts") {
        check(modinv_report_counts(make_ctx(o, 1).get(), o.dmax, &raw));
    } else if (sub == "paths") {
        check(modinv_report_paths(make_ctx(o, 1).get(), o.d, &raw));
    } else if (sub == "tensor") {
        check(modinv_report_tensor(make_ctx(o, 1).get(), o.d, &raw));
    } else if (sub == "decompose") {
        auto lambda = parse_multidegree(o.multidegree);
        auto method = o.method == "paths"  ? MODINV_DECOMPOSE_PATHS
                      : o.method == "both" ? MODINV_DECOMPOSE_BOTH
                                           : MODINV_DECOMPOSE_RANKS;
        auto ctx = make_ctx(o, static_cast<std::uint32_t>(lambda.size()));
        check(modinv_report_decompose(ctx.get(), lambda.data(), lambda.size(), method, &raw));
    } else if (sub == "sagbi") {
        auto variant = o.variant == "full" ? MODINV_VARIANT_FULL : MODINV_VARIANT_MINIMAL;
        check(modinv_report_sagbi(make_ctx(o, o.m).get(), o.dmax, variant, &raw));
    } else if (sub == "sl2") {
        check(modinv_report_sl2(make_ctx(o, o.m).get(), o.dmax, o.membership ? 1 : 0, &raw));
    }
    return ReportPtr(raw, &modinv_report_destroy);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Modular vector invariants of C_p and SL_2(F_p) on m copies of V_2"};
    app.require_subcommand(1, 1);
    Options o;

    app.add_option("--inject-fault", o.fault, "Deliberate arithmetic fault for testing")->group("");

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--inject-fault", o.fault, "Deliberate arithmetic fault for testing")->group("");
    };
    auto prime = [&](CLI::App* sub) { sub->add_option("--p", o.p, "Characteristic")->required(); };

    auto* counts = app.add_subcommand("counts", "Summand multiplicities and path counts");
    prime(counts);
    o.dmax = 0;
    counts->add_option("--dmax", o.dmax, "Largest tensor degree")->required();
    common(counts);

    auto* paths = app.add_subcommand("paths", "Classified lattice paths of length d");
    prime(paths);
    paths->add_option("--d", o.d, "Path length")->required();
    common(paths);

    auto* tensor = app.add_subcommand("tensor", "Decomposition of the d-fold tensor power of V_2");
    prime(tensor);
    tensor->add_option("--d", o.d, "Tensor degree")->required();
    common(tensor);

    auto* decompose = app.add_subcommand("decompose", "Decompose one multidegree component");
    prime(decompose);
    decompose->add_option("--multidegree", o.multidegree, "Comma-separated multidegree, e.g. 1,1,1,2")->required();
    decompose->add_option("--method", o.method, "ranks, paths, or both (cross-check)")
        ->check(CLI::IsMember({"ranks", "paths", "both"}));
    common(decompose);

    auto* sagbi = app.add_subcommand("sagbi", "Verify the SAGBI property up to a total degree");
    prime(sagbi);
    sagbi->add_option("--m", o.m, "Number of copies of V_2")->required()->check(CLI::Range(1u, 64u));
    sagbi->add_option("--dmax", o.dmax, "Largest total degree")->required();
    sagbi->add_option("--variant", o.variant, "minimal or full")->check(CLI::IsMember({"minimal", "full"}));
    common(sagbi);

    auto* sl2 = app.add_subcommand("sl2", "Minimal generators of the SL_2(F_p) invariants");
    prime(sl2);
    sl2->add_option("--m", o.m, "Number of copies of V_2")->required()->check(CLI::Range(1u, 64u));
    sl2->add_option("--dmax", o.dmax, "Largest total degree")->required();
    sl2->add_option("--budget", o.budget, "Wall-clock limit in seconds (default: MODINV_BUDGET_SECS)");
    sl2->add_flag("--membership", o.membership, "Also check generation by S_m and transfers");
    common(sl2);

    auto* selftest = app.add_subcommand("selftest", "Run the built-in oracle checks");
    selftest->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    selftest->add_option("--seed", o.seed, "Seed for the randomized sweeps");
    common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::string name = app.get_subcommands().front()->get_name();
    try {
        if (!o.fault.empty())
            check(modinv_set_fault(o.fault.c_str()));
        ReportPtr report = run(name, o);
        return emit(report, o, name);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "modinv " << name << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const CallError& e) {
        std::cerr << "modinv " << name << ": " << modinv_status_name(e.status) << ": " << e.message << '\n';
        return e.status == MODINV_E_RELATION_FAILED ? kExitFailed : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "modinv " << name << ": " << e.what() << '\n';
        return kExitUsage;
    }
}
