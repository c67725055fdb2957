#pragma once

#include "sal/model.hpp"

#include <optional>
#include <string>

namespace sal {

// Graphviz text: one cluster per index in declaration order, worlds as nodes,
// R_index as edges. Worlds where `highlight` holds get a double circle.
[[nodiscard]] std::string to_dot( const StratifiedModel& m, const std::optional< std::string >& highlight = {} );

} // namespace sal
