#pragma once

namespace suzuki {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kTablesFormatVersion = 1;

}  // namespace suzuki
