#include "directives.hpp"
#include "sal/errors.hpp"
#include "sal/parser.hpp"

#include <map>
#include <set>

namespace sal {

using detail::Directive;
using detail::Located;
using detail::LocatedPair;

namespace {

std::vector< std::string > resolve_world_list( const std::map< std::string, std::size_t >& worlds,
                                               const std::vector< Located >& ids )
{
    std::vector< std::string > out;
    for ( const auto& id : ids ) {
        if ( !worlds.contains( id.text ) )
            throw UndeclaredIdentifier( "world", id.text, id.span );
        out.push_back( id.text );
    }
    return out;
}

std::vector< WorldPair > resolve_world_pairs( const std::map< std::string, std::size_t >& worlds,
                                              const std::vector< LocatedPair >& pairs )
{
    std::vector< WorldPair > out;
    for ( const auto& p : pairs ) {
        resolve_world_list( worlds, { p.lower, p.upper } );
        out.emplace_back( p.lower.text, p.upper.text );
    }
    return out;
}

void append_pairs( std::string& out, const std::vector< std::string >& names, const std::vector< Pair >& pairs,
                   std::string_view op )
{
    for ( const auto& [ a, b ] : pairs ) {
        out += ' ';
        out += names[ a ];
        out += op;
        out += names[ b ];
    }
}

} // namespace

StratifiedModel parse_model( std::string_view text )
{
    detail::PosetHeader header;
    std::optional< std::vector< Located > > worlds;
    std::optional< std::vector< LocatedPair > > world_order;
    std::vector< Directive > rels;
    std::vector< Directive > vals;

    for ( const auto& line : detail::split_lines( text ) ) {
        if ( detail::is_blank( line.text ) )
            continue;
        const auto word = detail::leading_word( line.text );
        const bool takes_subject = word == "rel" || word == "val";
        Directive d = detail::parse_directive( line, takes_subject );
        const auto& k = d.keyword.text;
        if ( header.accept( d ) )
            continue;
        if ( k == "worlds" ) {
            if ( worlds )
                throw ParseError( "duplicate 'worlds' directive", d.keyword.span );
            worlds = detail::identifier_list( d );
            std::set< std::string > seen;
            for ( const auto& w : *worlds )
                if ( !seen.insert( w.text ).second )
                    throw ParseError( "duplicate world '" + w.text + "'", w.span );
            if ( worlds->empty() )
                throw ParseError( "a model needs at least one world", d.line_span, { "identifier" } );
        }
        else if ( k == "worldorder" ) {
            auto pairs = detail::pair_list( d, "<=" );
            if ( !world_order )
                world_order.emplace();
            world_order->insert( world_order->end(), pairs.begin(), pairs.end() );
        }
        else if ( k == "rel" )
            rels.push_back( std::move( d ) );
        else if ( k == "val" )
            vals.push_back( std::move( d ) );
        else
            throw ParseError( "unknown directive '" + k + "'", d.keyword.span,
                              { "indices", "order", "stable", "worlds", "worldorder", "rel", "val" } );
    }

    if ( !header.has_indices() )
        throw ParseError( "missing 'indices' directive", { text.size(), text.size() }, { "indices" } );
    if ( !worlds )
        throw ParseError( "missing 'worlds' directive", { text.size(), text.size() }, { "worlds" } );

    IndexPoset poset = header.build();

    ModelSpec spec;
    spec.indices = poset.names();
    for ( const auto& [ a, b ] : covering_pairs( poset.order() ) )
        spec.order.emplace_back( poset.name( a ), poset.name( b ) );
    spec.stable = poset.stable_names();

    std::map< std::string, std::size_t > world_pos;
    for ( const auto& w : *worlds ) {
        world_pos.emplace( w.text, spec.worlds.size() );
        spec.worlds.push_back( w.text );
    }
    if ( world_order )
        spec.world_order = resolve_world_pairs( world_pos, *world_order );

    for ( const auto& d : rels ) {
        if ( !poset.find( d.subject->text ) )
            throw UndeclaredIdentifier( "index", d.subject->text, d.subject->span );
        auto pairs = resolve_world_pairs( world_pos, detail::pair_list( d, "->" ) );
        auto& dst = spec.relations[ d.subject->text ];
        dst.insert( dst.end(), pairs.begin(), pairs.end() );
    }
    for ( const auto& d : vals ) {
        auto members = resolve_world_list( world_pos, detail::identifier_list( d ) );
        auto& dst = spec.valuation[ d.subject->text ];
        dst.insert( dst.end(), members.begin(), members.end() );
    }
    return build_model( spec );
}

std::string print_poset( const IndexPoset& poset )
{
    std::string out = "indices:";
    for ( const auto& n : poset.names() )
        out += ' ' + n;
    out += '\n';
    auto cover = covering_pairs( poset.order() );
    if ( !cover.empty() ) {
        out += "order:";
        append_pairs( out, poset.names(), cover, "<=" );
        out += '\n';
    }
    auto stable = poset.stable_names();
    if ( !stable.empty() ) {
        out += "stable:";
        for ( const auto& s : stable )
            out += ' ' + s;
        out += '\n';
    }
    return out;
}

std::string print_model( const StratifiedModel& m )
{
    std::string out = print_poset( m.poset() );
    out += "worlds:";
    for ( const auto& w : m.worlds() )
        out += ' ' + w;
    out += '\n';
    if ( m.world_order() ) {
        out += "worldorder:";
        append_pairs( out, m.worlds(), covering_pairs( *m.world_order() ), "<=" );
        out += '\n';
    }
    for ( std::size_t i = 0; i < m.poset().size(); ++i ) {
        out += "rel " + m.poset().name( i ) + ':';
        append_pairs( out, m.worlds(), m.relation( i ).pairs(), "->" );
        out += '\n';
    }
    for ( const auto& [ atom, set ] : m.valuation() ) {
        out += "val " + atom + ':';
        for ( std::size_t w = 0; w < set.size(); ++w )
            if ( set[ w ] )
                out += ' ' + m.world( w );
        out += '\n';
    }
    return out;
}

IndexPoset parse_poset( std::string_view text )
{
    detail::PosetHeader header;
    for ( const auto& line : detail::split_lines( text ) ) {
        if ( detail::is_blank( line.text ) )
            continue;
        Directive d = detail::parse_directive( line, false );
        if ( !header.accept( d ) )
            throw ParseError( "unexpected directive '" + d.keyword.text + "' in a poset file", d.keyword.span,
                              { "indices", "order", "stable" } );
    }
    if ( !header.has_indices() )
        throw ParseError( "missing 'indices' directive", { text.size(), text.size() }, { "indices" } );
    return header.build();
}

} // namespace sal
