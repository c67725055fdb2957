#include "sal/poset.hpp"

#include "sal/config.hpp"
#include "sal/errors.hpp"
#include "sal/identifier.hpp"

#include <algorithm>
#include <set>

namespace sal {

std::string_view to_string( CoherenceMode mode )
{
    switch ( mode ) {
    case CoherenceMode::shrink: return "shrink";
    case CoherenceMode::grow: return "grow";
    case CoherenceMode::none: return "none";
    }
    return "?";
}

std::string_view to_string( AxiomProfile profile )
{
    return profile == AxiomProfile::section2 ? "section2" : "section3";
}

std::optional< CoherenceMode > parse_coherence_mode( std::string_view text )
{
    if ( text == "shrink" )
        return CoherenceMode::shrink;
    if ( text == "grow" )
        return CoherenceMode::grow;
    if ( text == "none" )
        return CoherenceMode::none;
    return std::nullopt;
}

std::optional< AxiomProfile > parse_axiom_profile( std::string_view text )
{
    if ( text == "section2" )
        return AxiomProfile::section2;
    if ( text == "section3" )
        return AxiomProfile::section3;
    return std::nullopt;
}

IndexPoset::IndexPoset( std::vector< std::string > indices,
                        const std::vector< IndexPair >& order_generators,
                        const std::vector< std::string >& stable )
    : _names( std::move( indices ) )
{
    if ( _names.empty() )
        throw ModelError( "index set must not be empty" );
    std::set< std::string_view > seen;
    for ( const auto& n : _names ) {
        if ( !is_identifier( n ) )
            throw ModelError( "malformed index identifier '" + n + "'" );
        if ( !seen.insert( n ).second )
            throw ModelError( "duplicate index '" + n + "'" );
    }

    std::vector< Pair > generators;
    generators.reserve( order_generators.size() );
    for ( const auto& [ lo, hi ] : order_generators )
        generators.emplace_back( position( lo ), position( hi ) );
    _order = poset_closure( generators, _names );

    _stable.assign( _names.size(), false );
    for ( const auto& s : stable )
        _stable[ position( s ) ] = true;
}

std::optional< std::size_t > IndexPoset::find( std::string_view name ) const
{
    auto it = std::find( _names.begin(), _names.end(), name );
    if ( it == _names.end() )
        return std::nullopt;
    return static_cast< std::size_t >( it - _names.begin() );
}

std::size_t IndexPoset::position( std::string_view name ) const
{
    if ( auto p = find( name ) )
        return *p;
    throw UndeclaredIdentifier( "index", std::string( name ) );
}

bool IndexPoset::leq( std::string_view lower, std::string_view upper ) const
{
    return leq( position( lower ), position( upper ) );
}

bool IndexPoset::is_stable( std::string_view name ) const
{
    return is_stable( position( name ) );
}

std::vector< std::string > IndexPoset::stable_names() const
{
    std::vector< std::string > out;
    for ( std::size_t i = 0; i < _names.size(); ++i )
        if ( _stable[ i ] )
            out.push_back( _names[ i ] );
    return out;
}

IndexPoset IndexPoset::with_stable( const std::vector< std::string >& stable ) const
{
    IndexPoset copy = *this;
    copy._stable.assign( _names.size(), false );
    for ( const auto& s : stable )
        copy._stable[ position( s ) ] = true;
    return copy;
}

} // namespace sal
