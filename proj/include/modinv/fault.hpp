#pragma once

// Deliberate fault injection, used only to prove that the self-test notices
// arithmetic bugs.  Faults are process-global and off by default.

#include <string_view>

namespace modinv::fault {

enum class Kind { None, TransferSign };

/// Accepts "transfer-sign" or "none". Throws Errc::InvalidArgument otherwise.
void set(std::string_view name);
Kind active() noexcept;

}  // namespace modinv::fault
