#pragma once

namespace gfnoma {

inline constexpr const char* kVersion = "0.1.0";

}
