#pragma once

namespace fockwit {
inline constexpr const char* kVersion = "0.1.0";
}
