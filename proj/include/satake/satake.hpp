#pragma once

// Umbrella header.

#include "satake/groups.hpp"
#include "satake/hall_littlewood.hpp"
#include "satake/hecke_satake.hpp"
#include "satake/one_level.hpp"
#include "satake/parse.hpp"
#include "satake/plancherel.hpp"
#include "satake/rmt.hpp"
#include "satake/sato_tate.hpp"
#include "satake/symmetry.hpp"

namespace satake {
inline constexpr const char* kVersion = "0.1.0";
}
