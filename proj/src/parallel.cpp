#include "modinv/parallel.hpp"

#include <cstdlib>
#include <string>

namespace modinv {

Deadline Deadline::from_env()
{
    const char* raw = std::getenv("MODINV_BUDGET_SECS");
    if (!raw || !*raw)
        return {};
    try {
        double secs = std::stod(raw);
        if (secs > 0)
            return Deadline(secs);
    } catch (const std::exception&) {
    }
    return {};
}

}  // namespace modinv
