#pragma once

namespace reflectlab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

}  // namespace reflectlab
