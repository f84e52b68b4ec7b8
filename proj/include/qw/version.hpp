#pragma once

namespace qw {

inline constexpr const char* version = "0.1.0";

}
