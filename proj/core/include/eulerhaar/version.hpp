#pragma once

namespace eulerhaar {

inline constexpr const char* kVersion = "0.1.0";

}
