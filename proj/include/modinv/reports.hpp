#pragma once

// JSON reports behind the C API and the command-line tool. Key order is
// fixed and nothing time- or schedule-dependent is recorded, so equal
// requests serialise to equal bytes.

#include <cstdint>

#include <json.hpp>

#include "modinv/polyring.hpp"
#include "modinv/sagbi.hpp"
#include "modinv/sl2.hpp"

namespace modinv {

using Json = nlohmann::ordered_json;

enum class DecomposeMethod { Ranks, Paths, Both };
enum class SelftestLevel { Quick, Full };

/// mu, nu and nu_bar tables up to d_max, checked against brute-force path
/// counts for d <= min(d_max, 20).
Json counts_report(std::uint32_t p, std::uint32_t d_max);

/// Every PDP/IDP path of length d with its class and Lambda monomial.
Json paths_report(std::uint32_t p, std::uint32_t d);

/// Summand multiplicities of the d-fold tensor power of V_2. For d <= 8 the
/// theta invariants are also checked (invariance, lead, length).
Json tensor_report(std::uint32_t p, std::uint32_t d, unsigned workers = 1);

Json decompose_report(std::uint32_t p, const MultiDegree& lambda, DecomposeMethod method);

/// SAGBI checks for every multidegree with 1 <= |lambda| <= d_max, plus the
/// minimality report for the Minimal variant.
Json sagbi_report(std::uint32_t p, std::uint32_t m, std::uint32_t d_max, Variant variant, unsigned workers = 1);

/// Noether number against the corollary bounds; with `membership`, also
/// checks that S_m and transfers span the invariants up to d_max.
Json sl2_report(std::uint32_t p, std::uint32_t m, std::uint32_t d_max, const SL2Options& opts, bool membership);

Json selftest_report(SelftestLevel level, std::uint64_t seed);

/// Reports without a "passed" key count as passed.
bool report_passed(const Json& report);

}  // namespace modinv
