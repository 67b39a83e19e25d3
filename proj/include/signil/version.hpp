#pragma once

namespace signil {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace signil
