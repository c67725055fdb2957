#include "sal/relation.hpp"

#include "sal/errors.hpp"

namespace sal {

std::vector< Pair > Relation::pairs() const
{
    std::vector< Pair > out;
    for ( std::size_t i = 0; i < _n; ++i )
        for ( std::size_t j = 0; j < _n; ++j )
            if ( contains( i, j ) )
                out.emplace_back( i, j );
    return out;
}

std::size_t Relation::count() const
{
    std::size_t c = 0;
    for ( auto b : _bits )
        c += b;
    return c;
}

std::vector< std::size_t > Relation::successors( std::size_t from ) const
{
    std::vector< std::size_t > out;
    for ( std::size_t j = 0; j < _n; ++j )
        if ( contains( from, j ) )
            out.push_back( j );
    return out;
}

bool Relation::is_subset_of( const Relation& other ) const
{
    if ( other._n != _n )
        return false;
    for ( std::size_t k = 0; k < _bits.size(); ++k )
        if ( _bits[ k ] && !other._bits[ k ] )
            return false;
    return true;
}

bool Relation::is_reflexive() const
{
    for ( std::size_t i = 0; i < _n; ++i )
        if ( !contains( i, i ) )
            return false;
    return true;
}

bool Relation::is_transitive() const
{
    for ( std::size_t i = 0; i < _n; ++i )
        for ( std::size_t j = 0; j < _n; ++j )
            if ( contains( i, j ) )
                for ( std::size_t k = 0; k < _n; ++k )
                    if ( contains( j, k ) && !contains( i, k ) )
                        return false;
    return true;
}

bool Relation::is_antisymmetric() const
{
    for ( std::size_t i = 0; i < _n; ++i )
        for ( std::size_t j = i + 1; j < _n; ++j )
            if ( contains( i, j ) && contains( j, i ) )
                return false;
    return true;
}

Relation reflexive_transitive_closure( const Relation& r )
{
    Relation out = r;
    const std::size_t n = r.size();
    for ( std::size_t i = 0; i < n; ++i )
        out.insert( i, i );
    // Warshall
    for ( std::size_t k = 0; k < n; ++k )
        for ( std::size_t i = 0; i < n; ++i )
            if ( out.contains( i, k ) )
                for ( std::size_t j = 0; j < n; ++j )
                    if ( out.contains( k, j ) )
                        out.insert( i, j );
    return out;
}

Relation poset_closure( std::span< const Pair > generators, std::span< const std::string > names )
{
    Relation r( names.size() );
    for ( const auto& [ a, b ] : generators ) {
        if ( a >= names.size() || b >= names.size() )
            throw ModelError( "order generator refers to an element outside the carrier" );
        r.insert( a, b );
    }
    Relation closed = reflexive_transitive_closure( r );
    for ( std::size_t i = 0; i < names.size(); ++i )
        for ( std::size_t j = i + 1; j < names.size(); ++j )
            if ( closed.contains( i, j ) && closed.contains( j, i ) )
                throw CycleError( names[ i ], names[ j ] );
    return closed;
}

std::vector< Pair > covering_pairs( const Relation& order )
{
    std::vector< Pair > out;
    const std::size_t n = order.size();
    for ( std::size_t i = 0; i < n; ++i )
        for ( std::size_t j = 0; j < n; ++j ) {
            if ( i == j || !order.contains( i, j ) )
                continue;
            bool covered = true;
            for ( std::size_t k = 0; k < n && covered; ++k )
                if ( k != i && k != j && order.contains( i, k ) && order.contains( k, j ) )
                    covered = false;
            if ( covered )
                out.emplace_back( i, j );
        }
    return out;
}

} // namespace sal
