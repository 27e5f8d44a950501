#pragma once

namespace fatpoints {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fatpoints
