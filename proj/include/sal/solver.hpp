#pragma once

#include "sal/checker.hpp"
#include "sal/config.hpp"
#include "sal/formula.hpp"
#include "sal/model.hpp"
#include "sal/poset.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sal {

struct SearchBounds
{
    std::size_t max_worlds = 3;
    std::size_t max_indices = 2;
    // When set, only this poset is searched (max_indices is ignored) and its
    // stable set is added to required_stable.
    std::optional< IndexPoset > fixed_poset;
    // Valuations range over these atoms plus those of the query formula.
    std::vector< std::string > atoms;
    // Every enumerated model declares these indices stable.
    std::vector< std::string > required_stable;
    long double ceiling = 1e9;
};

struct ValidUpTo
{
    SearchBounds bounds;
};

struct UnsatUpTo
{
    SearchBounds bounds;
};

struct Counterexample
{
    StratifiedModel model;
    std::string world;
    std::string index;
};

struct Satisfiable
{
    StratifiedModel model;
    std::string world;
    std::string index;
};

using Verdict = std::variant< ValidUpTo, Counterexample, Satisfiable, UnsatUpTo >;

struct SearchOptions
{
    std::size_t workers = 1;
};

// Posets named a, b, c, ... whose order is compatible with declaration
// order, for every size 1..max_indices; for two indices exactly the
// antichain and the chain a <= b.
[[nodiscard]] std::vector< IndexPoset > enumerate_posets( std::size_t max_indices );

// Upper bound on the number of models enumerated, before frame pruning.
[[nodiscard]] long double estimate_models( const Formula& f, const SearchBounds& bounds, const FramePolicy& policy );

// Enumerates models in a fixed order (world count, poset, stable set, relation
// bitmasks index by index, valuation) and reports the first one falsifying f.
// The answer does not depend on options.workers. Throws BoundsTooLarge,
// UndeclaredIdentifier, std::invalid_argument on zero bounds.
[[nodiscard]] Verdict decide_valid( const Formula& f, const SearchBounds& bounds, const FramePolicy& policy,
                                    const SearchOptions& options = {} );

// Satisfiable exactly when decide_valid( ~f ) finds a counterexample, with the same witness.
[[nodiscard]] Verdict decide_sat( const Formula& f, const SearchBounds& bounds, const FramePolicy& policy,
                                  const SearchOptions& options = {} );

[[nodiscard]] bool is_affirmative( const Verdict& v ); // ValidUpTo or Satisfiable

// Verdict line plus, for witnesses, the model in the model file format with
// comment headers, so the whole text re-parses as a model.
[[nodiscard]] std::string print_verdict( const Verdict& v );

enum class Schema
{
    k,
    a2,
    a3,
    a4,
    ddown,
};

[[nodiscard]] std::string_view to_string( Schema s );

struct MatrixOptions
{
    std::vector< Schema > schemas = { Schema::k, Schema::a2, Schema::a3, Schema::a4, Schema::ddown };
    std::vector< CoherenceMode > modes = { CoherenceMode::shrink, CoherenceMode::grow, CoherenceMode::none };
    std::vector< bool > stable_reflexive = { true, false };
    std::size_t max_worlds = 3;
    std::size_t max_indices = 2;
    long double ceiling = 1e9;
    SearchOptions search;
};

struct MatrixRow
{
    Schema schema;
    std::string poset;
    std::string lower; // K and A3 use a single index: lower == upper
    std::string upper;
    CoherenceMode mode;
    bool stable_reflexive;
    Formula instance;
    Verdict verdict;
};

// Instantiates each schema over p (and q for K) at every index, or pair
// lower <= upper, of every enumerated poset and decides it per frame policy.
[[nodiscard]] std::vector< MatrixRow > axiom_matrix( const MatrixOptions& options );

// A schema holds for a policy iff all of its instances are ValidUpTo.
[[nodiscard]] bool schema_holds( const std::vector< MatrixRow >& rows, Schema schema, CoherenceMode mode,
                                 bool stable_reflexive );

[[nodiscard]] std::string print_matrix( const std::vector< MatrixRow >& rows );

[[nodiscard]] std::string poset_label( const IndexPoset& poset );

} // namespace sal
