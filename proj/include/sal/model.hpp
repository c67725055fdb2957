#pragma once

#include "sal/poset.hpp"
#include "sal/relation.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sal {

using WorldSet = std::vector< bool >;
using WorldPair = std::pair< std::string, std::string >;

// A finite stratified model: index poset, worlds, optional world order,
// one accessibility relation per index, and a valuation. Immutable once built.
class StratifiedModel
{
public:
    // relations[i] belongs to poset.name(i) and is sized worlds.size();
    // world_order, when given, must already be a partial order.
    // Atoms missing from valuation are false everywhere.
    StratifiedModel( IndexPoset poset,
                     std::vector< std::string > worlds,
                     std::vector< Relation > relations,
                     std::map< std::string, WorldSet > valuation,
                     std::optional< Relation > world_order = std::nullopt );

    [[nodiscard]] const IndexPoset& poset() const { return _poset; }
    [[nodiscard]] std::size_t world_count() const { return _worlds.size(); }
    [[nodiscard]] const std::vector< std::string >& worlds() const { return _worlds; }
    [[nodiscard]] const std::string& world( std::size_t position ) const { return _worlds[ position ]; }
    [[nodiscard]] std::optional< std::size_t > find_world( std::string_view name ) const;
    [[nodiscard]] std::size_t world_position( std::string_view name ) const; // throws UndeclaredIdentifier

    [[nodiscard]] const std::optional< Relation >& world_order() const { return _world_order; }
    [[nodiscard]] const Relation& relation( std::size_t index_position ) const { return _relations[ index_position ]; }
    [[nodiscard]] const Relation& relation( std::string_view index ) const;
    [[nodiscard]] const std::vector< Relation >& relations() const { return _relations; }

    [[nodiscard]] const std::map< std::string, WorldSet >& valuation() const { return _valuation; }
    [[nodiscard]] bool holds( std::string_view atom, std::size_t world ) const;

    // Equality ignores atoms whose valuation is empty.
    friend bool operator==( const StratifiedModel& a, const StratifiedModel& b );

private:
    IndexPoset _poset;
    std::vector< std::string > _worlds;
    std::vector< Relation > _relations;
    std::map< std::string, WorldSet > _valuation;
    std::optional< Relation > _world_order;
};

// Name-based construction, used by tests and bindings.
struct ModelSpec
{
    std::vector< std::string > indices;
    std::vector< IndexPair > order;
    std::vector< std::string > stable;
    std::vector< std::string > worlds;
    std::optional< std::vector< WorldPair > > world_order;
    std::map< std::string, std::vector< WorldPair > > relations;
    std::map< std::string, std::vector< std::string > > valuation;
};

// Closes both orders; throws CycleError, UndeclaredIdentifier, ModelError.
[[nodiscard]] StratifiedModel build_model( const ModelSpec& spec );

} // namespace sal
