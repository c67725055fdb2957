#pragma once

#include "sal/config.hpp"
#include "sal/derivation.hpp"
#include "sal/formula.hpp"
#include "sal/poset.hpp"

#include <string>
#include <vector>

namespace sal {

// A4 is illegal under section2 and DDOWN under section3.
[[nodiscard]] bool tag_allowed( AxiomTag tag, AxiomProfile profile );

// True iff f instantiates the schema named by tag. A1 is decided by a truth
// table over the propositional skeleton, where maximal modal subformulas are
// read as fresh atoms. Throws IllegalTagForProfile.
[[nodiscard]] bool match_axiom( const Formula& f, AxiomTag tag, const IndexPoset& poset, AxiomProfile profile );

[[nodiscard]] bool is_tautology_skeleton( const Formula& f );

enum class RejectReason
{
    none,
    not_an_instance,
    illegal_tag_for_profile,
    undeclared_index,
    cites_rejected_line,
    modus_ponens_mismatch,
    necessitation_mismatch,
    non_stable_necessitation,
};

[[nodiscard]] std::string_view to_string( RejectReason reason );

struct LineReport
{
    std::size_t number;
    bool accepted;
    RejectReason reason;
    std::string detail;
};

struct CheckReport
{
    std::vector< LineReport > lines;

    [[nodiscard]] bool valid() const;
};

[[nodiscard]] CheckReport check_derivation( const Derivation& d );

[[nodiscard]] std::string print_report( const CheckReport& report );

} // namespace sal
