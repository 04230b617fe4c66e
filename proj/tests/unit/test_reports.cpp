#include <atomic>
#include <stdexcept>

#include "../support.hpp"
#include "modinv/parallel.hpp"
#include "modinv/reports.hpp"

using namespace modinv;

TEST_CASE("decompose report has the fixed shape")
{
    CHECK(decompose_report(7, {1, 1, 1, 2}, DecomposeMethod::Ranks).dump() ==
          R"({"p":7,"multidegree":[1,1,1,2],"summands":{"2":3,"4":3,"6":1}})");
    auto both = decompose_report(5, {1, 1, 1, 2}, DecomposeMethod::Both);
    CHECK(both["agreement"] == true);
    CHECK(both["summands"].dump() == R"({"2":3,"4":2,"5":2})");
    CHECK(report_passed(both));
    CHECK_ERRC(decompose_report(6, {1}, DecomposeMethod::Ranks), Errc::NotPrime);
}

TEST_CASE("counts report")
{
    auto r = counts_report(3, 4);
    CHECK(r["mu"][4][2] == 5);
    CHECK(r["brute_force_agrees"] == true);
    CHECK(r["corollary_holds"] == true);
    CHECK(report_passed(r));
}

TEST_CASE("paths and tensor reports")
{
    auto p = paths_report(3, 3);
    CHECK(p["paths"].size() == 3);
    CHECK(p["tally"]["idp"] == 2);
    CHECK(p["total_dimension"] == 8);
    auto t = tensor_report(7, 5);
    CHECK(t["summands"].dump() == R"({"2":5,"4":4,"6":1})");
    CHECK(report_passed(t));
    CHECK(tensor_report(5, 6, 1).dump() == tensor_report(5, 6, 4).dump());
    CHECK(tensor_report(3, 10)["checks"].is_null());
}

TEST_CASE("sagbi report")
{
    auto r = sagbi_report(3, 2, 4, Variant::Minimal);
    CHECK(report_passed(r));
    CHECK(r["minimality"]["passed"] == true);
    CHECK(r.dump() == sagbi_report(3, 2, 4, Variant::Minimal, 3).dump());
    CHECK(sagbi_report(2, 2, 3, Variant::Full)["minimality"].is_null());
}

TEST_CASE("sl2 report")
{
    SL2Options opts;
    auto r = sl2_report(3, 3, 9, opts, false);
    CHECK(r["generators"] == 28);
    CHECK(r["per_degree"].dump() == R"({"2":3,"4":9,"6":7,"8":9})");
    CHECK(r["noether_number"] == 8);
    CHECK(r["corollary_holds"] == true);
    CHECK(report_passed(r));
    auto r2 = sl2_report(2, 2, 4, opts, true);
    CHECK(r2["noether_number"] == 3);
    CHECK(r2["expected_noether_number"] == 3);
    CHECK(r2["membership"]["passed"] == true);
    SL2Options hurry;
    hurry.budget_secs = 1e-9;
    CHECK_ERRC(sl2_report(3, 3, 9, hurry, false), Errc::BudgetExceeded);
}

TEST_CASE("selftest report")
{
    auto r = selftest_report(SelftestLevel::Quick, 1);
    CHECK(report_passed(r));
    CHECK(r["executed"].get<std::size_t>() == r["checks"].size());
    CHECK(r["failed"].empty());
}

TEST_CASE("report_passed")
{
    CHECK(report_passed(Json::object()));
    CHECK(!report_passed(Json{{"passed", false}}));
    CHECK(!report_passed(Json{{"passed", "yes"}}));
}

TEST_CASE("parallel_map keeps input order and rethrows")
{
    std::vector<int> items(100);
    for (int i = 0; i < 100; ++i)
        items[i] = i;
    auto out = parallel_map(items, 8, [](int x) { return x * x; });
    for (int i = 0; i < 100; ++i)
        CHECK(out[i] == i * i);
    CHECK_THROWS_AS(parallel_map(items, 4,
                                 [](int x) {
                                     if (x == 37)
                                         throw std::runtime_error("boom");
                                     return x;
                                 }),
                    std::runtime_error);
    CHECK(parallel_map(std::vector<int>{}, 4, [](int x) { return x; }).empty());
}

TEST_CASE("deadline")
{
    CHECK(!Deadline().expired());
    Deadline past(-1.0);
    CHECK(past.expired());
    CHECK_ERRC(past.check(), Errc::BudgetExceeded);
}
