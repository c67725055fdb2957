#include "sal/formula.hpp"

#include "sal/errors.hpp"
#include "sal/identifier.hpp"

#include <algorithm>

namespace sal {

bool Formula::is_binary() const
{
    switch ( kind() ) {
    case Connective::conjunction:
    case Connective::disjunction:
    case Connective::implication: return true;
    default: return false;
    }
}

Formula Formula::make( Connective kind, std::string label, const Formula* left, const Formula* right )
{
    auto node = std::make_shared< Node >();
    node->kind = kind;
    node->label = std::move( label );
    node->size = 1;
    node->depth = 0;
    if ( left ) {
        node->left = std::make_unique< const Formula >( *left );
        node->size += left->node_count();
        node->depth = left->depth() + 1;
    }
    if ( right ) {
        node->right = std::make_unique< const Formula >( *right );
        node->size += right->node_count();
        node->depth = std::max( node->depth, right->depth() + 1 );
    }
    return Formula( std::move( node ) );
}

bool operator==( const Formula& a, const Formula& b )
{
    return ( a <=> b ) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>( const Formula& a, const Formula& b )
{
    if ( a._node == b._node )
        return std::strong_ordering::equal;
    if ( auto c = a.kind() <=> b.kind(); c != 0 )
        return c;
    if ( auto c = a.label().compare( b.label() ); c != 0 )
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if ( a._node->left ) {
        if ( auto c = a.left() <=> b.left(); c != 0 )
            return c;
    }
    if ( a._node->right )
        return a.right() <=> b.right();
    return std::strong_ordering::equal;
}

namespace {

void require_identifier( const std::string& s, const char* what )
{
    if ( !is_identifier( s ) )
        throw ModelError( std::string( "malformed " ) + what + " identifier '" + s + "'" );
}

} // namespace

Formula atom( std::string name )
{
    require_identifier( name, "atom" );
    return Formula::make( Connective::atom, std::move( name ), nullptr, nullptr );
}

Formula negation( Formula f ) { return Formula::make( Connective::negation, {}, &f, nullptr ); }
Formula conjunction( Formula f, Formula g ) { return Formula::make( Connective::conjunction, {}, &f, &g ); }
Formula disjunction( Formula f, Formula g ) { return Formula::make( Connective::disjunction, {}, &f, &g ); }
Formula implication( Formula f, Formula g ) { return Formula::make( Connective::implication, {}, &f, &g ); }

Formula box( std::string index, Formula f )
{
    require_identifier( index, "index" );
    return Formula::make( Connective::box, std::move( index ), &f, nullptr );
}

Formula diamond( std::string index, Formula f )
{
    require_identifier( index, "index" );
    return Formula::make( Connective::diamond, std::move( index ), &f, nullptr );
}

namespace {

void collect( const Formula& f, std::set< Formula >& seen, std::vector< Formula >& out )
{
    if ( seen.contains( f ) )
        return;
    if ( !f.is_atom() ) {
        collect( f.left(), seen, out );
        if ( f.is_binary() )
            collect( f.right(), seen, out );
    }
    seen.insert( f );
    out.push_back( f );
}

} // namespace

std::vector< Formula > subformulas( const Formula& f )
{
    std::set< Formula > seen;
    std::vector< Formula > out;
    collect( f, seen, out );
    return out;
}

std::set< std::string > atoms_of( const Formula& f )
{
    std::set< std::string > out;
    for ( const auto& g : subformulas( f ) )
        if ( g.is_atom() )
            out.insert( g.label() );
    return out;
}

std::set< std::string > indices_of( const Formula& f )
{
    std::set< std::string > out;
    for ( const auto& g : subformulas( f ) )
        if ( g.is_modal() )
            out.insert( g.label() );
    return out;
}

} // namespace sal
