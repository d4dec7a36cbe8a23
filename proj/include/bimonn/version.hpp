#pragma once

namespace bimonn {

inline constexpr const char* kVersion = "bimonn-1.0.0";

}  // namespace bimonn
