#include "sal/model.hpp"

#include "sal/errors.hpp"
#include "sal/identifier.hpp"

#include <algorithm>
#include <set>

namespace sal {

StratifiedModel::StratifiedModel( IndexPoset poset,
                                  std::vector< std::string > worlds,
                                  std::vector< Relation > relations,
                                  std::map< std::string, WorldSet > valuation,
                                  std::optional< Relation > world_order )
    : _poset( std::move( poset ) ), _worlds( std::move( worlds ) ), _relations( std::move( relations ) ),
      _valuation( std::move( valuation ) ), _world_order( std::move( world_order ) )
{
    if ( _worlds.empty() )
        throw ModelError( "a model needs at least one world" );
    std::set< std::string_view > seen;
    for ( const auto& w : _worlds ) {
        if ( !is_identifier( w ) )
            throw ModelError( "malformed world identifier '" + w + "'" );
        if ( !seen.insert( w ).second )
            throw ModelError( "duplicate world '" + w + "'" );
    }
    if ( _relations.size() != _poset.size() )
        throw ModelError( "expected one accessibility relation per index" );
    for ( const auto& r : _relations )
        if ( r.size() != _worlds.size() )
            throw ModelError( "accessibility relation does not match the world count" );
    for ( const auto& [ name, set ] : _valuation ) {
        if ( !is_identifier( name ) )
            throw ModelError( "malformed atom identifier '" + name + "'" );
        if ( set.size() != _worlds.size() )
            throw ModelError( "valuation of '" + name + "' does not match the world count" );
    }
    if ( _world_order ) {
        if ( _world_order->size() != _worlds.size() )
            throw ModelError( "world order does not match the world count" );
        if ( !_world_order->is_partial_order() )
            throw ModelError( "world order is not a partial order" );
    }
}

std::optional< std::size_t > StratifiedModel::find_world( std::string_view name ) const
{
    auto it = std::find( _worlds.begin(), _worlds.end(), name );
    if ( it == _worlds.end() )
        return std::nullopt;
    return static_cast< std::size_t >( it - _worlds.begin() );
}

std::size_t StratifiedModel::world_position( std::string_view name ) const
{
    if ( auto p = find_world( name ) )
        return *p;
    throw UndeclaredIdentifier( "world", std::string( name ) );
}

const Relation& StratifiedModel::relation( std::string_view index ) const
{
    return _relations[ _poset.position( index ) ];
}

bool StratifiedModel::holds( std::string_view atom, std::size_t world ) const
{
    auto it = _valuation.find( std::string( atom ) );
    return it != _valuation.end() && it->second[ world ];
}

namespace {

std::map< std::string, WorldSet > non_empty( const std::map< std::string, WorldSet >& v )
{
    std::map< std::string, WorldSet > out;
    for ( const auto& [ k, s ] : v )
        if ( std::find( s.begin(), s.end(), true ) != s.end() )
            out.emplace( k, s );
    return out;
}

} // namespace

bool operator==( const StratifiedModel& a, const StratifiedModel& b )
{
    return a._poset == b._poset && a._worlds == b._worlds && a._relations == b._relations
        && a._world_order == b._world_order && non_empty( a._valuation ) == non_empty( b._valuation );
}

StratifiedModel build_model( const ModelSpec& spec )
{
    IndexPoset poset( spec.indices, spec.order, spec.stable );

    std::map< std::string_view, std::size_t > world_pos;
    for ( std::size_t i = 0; i < spec.worlds.size(); ++i )
        world_pos.emplace( spec.worlds[ i ], i );
    auto world = [ & ]( const std::string& name ) {
        auto it = world_pos.find( name );
        if ( it == world_pos.end() )
            throw UndeclaredIdentifier( "world", name );
        return it->second;
    };

    const std::size_t n = spec.worlds.size();
    std::vector< Relation > relations( poset.size(), Relation( n ) );
    for ( const auto& [ index, pairs ] : spec.relations ) {
        auto& r = relations[ poset.position( index ) ];
        for ( const auto& [ from, to ] : pairs )
            r.insert( world( from ), world( to ) );
    }

    std::map< std::string, WorldSet > valuation;
    for ( const auto& [ atom, members ] : spec.valuation ) {
        WorldSet set( n, false );
        for ( const auto& w : members )
            set[ world( w ) ] = true;
        valuation[ atom ] = std::move( set );
    }

    std::optional< Relation > order;
    if ( spec.world_order ) {
        std::vector< Pair > gens;
        for ( const auto& [ lo, hi ] : *spec.world_order )
            gens.emplace_back( world( lo ), world( hi ) );
        order = poset_closure( gens, spec.worlds );
    }

    return StratifiedModel( std::move( poset ), spec.worlds, std::move( relations ), std::move( valuation ),
                            std::move( order ) );
}

} // namespace sal
