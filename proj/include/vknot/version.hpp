#pragma once

namespace vknot {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCensusSchema = "vknot-census/1";

} // namespace vknot
