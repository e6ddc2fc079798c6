#pragma once

namespace lgkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lgkit
