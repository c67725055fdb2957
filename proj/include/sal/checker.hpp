#pragma once

#include "sal/config.hpp"
#include "sal/formula.hpp"
#include "sal/model.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sal {

struct FramePolicy
{
    CoherenceMode coherence = CoherenceMode::shrink;
    bool require_stable_reflexive = true;
    bool strict = false; // strict: violations make is_admissible throw
};

enum class ViolationKind
{
    coherence_inclusion, // a pair of the index that should be included is missing from the other
    stable_not_reflexive,
    world_order,
};

[[nodiscard]] std::string_view to_string( ViolationKind kind );

struct Violation
{
    ViolationKind kind;
    std::string lower_index; // for coherence: lower <= upper in the poset
    std::string upper_index; // for stability: the stable index, repeated
    WorldPair pair;          // offending (or missing) pair of worlds

    friend bool operator==( const Violation&, const Violation& ) = default;
};

[[nodiscard]] std::string describe( const Violation& v );

// All violations of the policy's frame conditions, in index/world order.
[[nodiscard]] std::vector< Violation > validate_frame( const StratifiedModel& m, const FramePolicy& policy );

struct EvalTrace
{
    std::string world;
    std::string index;
    Formula formula;
    bool verdict;
    std::optional< std::string > witness; // successor deciding a modal node, if any
    std::vector< EvalTrace > children;
};

[[nodiscard]] std::string print_trace( const EvalTrace& trace );

// Labeling of every subformula at every world, computed bottom-up once.
// Atoms missing from the valuation are false; an undeclared modal index
// throws UndeclaredIdentifier.
class Evaluator
{
public:
    Evaluator( const StratifiedModel& m, const Formula& f );

    [[nodiscard]] bool holds( std::size_t world ) const { return _labels.back()[ world ]; }
    [[nodiscard]] const WorldSet& extension() const { return _labels.back(); }
    [[nodiscard]] const WorldSet& extension( const Formula& sub ) const;

    [[nodiscard]] EvalTrace trace( std::size_t world, const std::string& index ) const;

private:
    EvalTrace trace( const Formula& f, std::size_t world, const std::string& index ) const;

    const StratifiedModel* _model;
    std::vector< Formula > _subformulas;
    std::vector< WorldSet > _labels;
};

// Truth of f at world under the ambient index. The ambient index only annotates
// the judgement: modal operators dispatch on their own subscripts.
[[nodiscard]] bool eval( const StratifiedModel& m, std::string_view world, std::string_view index,
                         const Formula& f, std::optional< EvalTrace >* trace = nullptr );

// f is admissible at world under regime index iff <index> f holds there, on a
// frame meeting the policy. Throws FrameViolation in strict mode.
[[nodiscard]] bool is_admissible( const StratifiedModel& m, std::string_view world, std::string_view index,
                                  const Formula& f, const FramePolicy& policy );

} // namespace sal
