#pragma once

#include <optional>
#include <string_view>

namespace sal {

// Cross-layer inclusion constraint between R_lower and R_upper for lower <= upper.
enum class CoherenceMode
{
    shrink, // R_upper is a subset of R_lower: higher indices are more restrictive
    grow,   // R_lower is a subset of R_upper: accessibility expands upward
    none,
};

// Which persistence schema accompanies K, A1, A2 and A3.
enum class AxiomProfile
{
    section2, // diamond persistence downward (DDOWN)
    section3, // diamond persistence upward (A4)
};

[[nodiscard]] std::string_view to_string( CoherenceMode mode );
[[nodiscard]] std::string_view to_string( AxiomProfile profile );
[[nodiscard]] std::optional< CoherenceMode > parse_coherence_mode( std::string_view text );
[[nodiscard]] std::optional< AxiomProfile > parse_axiom_profile( std::string_view text );

} // namespace sal
