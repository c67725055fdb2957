#pragma once

#include "sal/config.hpp"
#include "sal/errors.hpp"
#include "sal/formula.hpp"
#include "sal/poset.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sal {

enum class AxiomTag
{
    a1,    // propositional tautology
    k,     // distribution
    a2,    // box persistence upward
    a3,    // reflection at stable indices
    a4,    // diamond persistence upward
    ddown, // diamond persistence downward
};

[[nodiscard]] std::string_view to_string( AxiomTag tag );

struct ModusPonens
{
    std::size_t antecedent_line; // holds phi
    std::size_t implication_line; // holds phi -> current

    friend bool operator==( const ModusPonens&, const ModusPonens& ) = default;
};

struct Necessitation
{
    std::string index;
    std::size_t premise_line;

    friend bool operator==( const Necessitation&, const Necessitation& ) = default;
};

using Justification = std::variant< AxiomTag, ModusPonens, Necessitation >;

[[nodiscard]] std::string to_string( const Justification& j );

struct ProofLine
{
    std::size_t number; // 1-based
    Formula formula;
    Justification justification;
    SourceSpan span;
};

struct Derivation
{
    std::vector< ProofLine > lines;
    AxiomProfile profile = AxiomProfile::section2;
    IndexPoset poset;
    bool nec_requires_stable = true;
};

} // namespace sal
