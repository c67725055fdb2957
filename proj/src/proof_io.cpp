#include "directives.hpp"
#include "sal/errors.hpp"
#include "sal/identifier.hpp"
#include "sal/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace sal {

std::string_view to_string( AxiomTag tag )
{
    switch ( tag ) {
    case AxiomTag::a1: return "A1";
    case AxiomTag::k: return "K";
    case AxiomTag::a2: return "A2";
    case AxiomTag::a3: return "A3";
    case AxiomTag::a4: return "A4";
    case AxiomTag::ddown: return "DDOWN";
    }
    return "?";
}

std::string to_string( const Justification& j )
{
    if ( const auto* tag = std::get_if< AxiomTag >( &j ) )
        return std::string( to_string( *tag ) );
    if ( const auto* mp = std::get_if< ModusPonens >( &j ) )
        return "MP " + std::to_string( mp->antecedent_line ) + ' ' + std::to_string( mp->implication_line );
    const auto& nec = std::get< Necessitation >( j );
    return "NEC " + nec.index + ' ' + std::to_string( nec.premise_line );
}

namespace {

const std::vector< std::string > justification_words = { "A1", "K", "A2", "A3", "A4", "DDOWN", "MP", "NEC" };

struct Word
{
    std::string_view text;
    SourceSpan span;
};

std::vector< Word > words( std::string_view text, std::size_t offset )
{
    std::vector< Word > out;
    std::size_t i = 0;
    while ( i < text.size() ) {
        while ( i < text.size() && ( text[ i ] == ' ' || text[ i ] == '\t' ) )
            ++i;
        std::size_t j = i;
        while ( j < text.size() && text[ j ] != ' ' && text[ j ] != '\t' )
            ++j;
        if ( j > i )
            out.push_back( { text.substr( i, j - i ), { offset + i, offset + j } } );
        i = j;
    }
    return out;
}

std::size_t line_number( const Word& w )
{
    std::size_t value = 0;
    auto [ ptr, ec ] = std::from_chars( w.text.data(), w.text.data() + w.text.size(), value );
    if ( ec != std::errc() || ptr != w.text.data() + w.text.size() || value == 0 )
        throw ParseError( "expected a line number, got '" + std::string( w.text ) + "'", w.span,
                          { "line number" } );
    return value;
}

Justification parse_justification( std::string_view text, std::size_t offset, std::size_t own,
                                   SourceSpan line_span )
{
    auto ws = words( text, offset );
    if ( ws.empty() )
        throw ParseError( "missing justification", { offset + text.size(), offset + text.size() },
                          justification_words );
    const auto& head = ws.front();
    auto arity = [ & ]( std::size_t n ) {
        if ( ws.size() != n + 1 ) {
            SourceSpan at = ws.size() > n + 1 ? ws[ n + 1 ].span : SourceSpan{ line_span.end, line_span.end };
            throw ParseError( "'" + std::string( head.text ) + "' takes " + std::to_string( n ) + " argument(s)",
                              at, {} );
        }
    };
    auto cite = [ & ]( const Word& w ) {
        std::size_t n = line_number( w );
        if ( n >= own )
            throw ForwardReference( own, n, w.span );
        return n;
    };

    static const std::pair< std::string_view, AxiomTag > tags[] = {
        { "A1", AxiomTag::a1 }, { "K", AxiomTag::k },   { "A2", AxiomTag::a2 },
        { "A3", AxiomTag::a3 }, { "A4", AxiomTag::a4 }, { "DDOWN", AxiomTag::ddown },
    };
    for ( const auto& [ word, tag ] : tags )
        if ( head.text == word ) {
            arity( 0 );
            return tag;
        }
    if ( head.text == "MP" ) {
        arity( 2 );
        return ModusPonens{ cite( ws[ 1 ] ), cite( ws[ 2 ] ) };
    }
    if ( head.text == "NEC" ) {
        arity( 2 );
        if ( !is_identifier( ws[ 1 ].text ) )
            throw ParseError( "expected an index identifier", ws[ 1 ].span, { "identifier" } );
        return Necessitation{ std::string( ws[ 1 ].text ), cite( ws[ 2 ] ) };
    }
    throw ParseError( "unknown justification '" + std::string( head.text ) + "'", head.span, justification_words );
}

void collect_indices( const Formula& f, std::vector< std::string >& out )
{
    if ( f.is_modal() && std::find( out.begin(), out.end(), f.label() ) == out.end() )
        out.push_back( f.label() );
    if ( !f.is_atom() ) {
        collect_indices( f.left(), out );
        if ( f.is_binary() )
            collect_indices( f.right(), out );
    }
}

} // namespace

Derivation parse_proof( std::string_view text )
{
    detail::PosetHeader header;
    std::vector< ProofLine > lines;

    for ( const auto& line : detail::split_lines( text ) ) {
        if ( detail::is_blank( line.text ) )
            continue;
        const auto first = line.text.find_first_not_of( " \t" );
        if ( !std::isdigit( static_cast< unsigned char >( line.text[ first ] ) ) ) {
            auto d = detail::parse_directive( line, false );
            if ( !header.accept( d ) )
                throw ParseError( "unexpected directive '" + d.keyword.text + "' in a proof script", d.keyword.span,
                                  { "indices", "order", "stable", "line number" } );
            if ( !lines.empty() )
                throw ParseError( "poset directives must precede the proof lines", d.keyword.span );
            continue;
        }

        const SourceSpan line_span{ line.offset, line.offset + line.text.size() };
        const auto dot = line.text.find( '.', first );
        if ( dot == std::string_view::npos )
            throw ParseError( "expected '.' after the line number", { line_span.end, line_span.end }, { "." } );
        const Word number_word{ line.text.substr( first, dot - first ), { line.offset + first, line.offset + dot } };
        const std::size_t number = line_number( number_word );
        if ( number != lines.size() + 1 )
            throw ParseError( "expected line number " + std::to_string( lines.size() + 1 ), number_word.span,
                              { std::to_string( lines.size() + 1 ) } );

        const auto semi = line.text.find( ';', dot + 1 );
        if ( semi == std::string_view::npos )
            throw ParseError( "expected ';' before the justification", { line_span.end, line_span.end }, { ";" } );

        const std::size_t formula_offset = line.offset + dot + 1;
        Formula formula = [ & ] {
            try {
                return parse_formula( line.text.substr( dot + 1, semi - dot - 1 ) );
            }
            catch ( const ParseError& e ) {
                throw ParseError( e.what(), { e.span().start + formula_offset, e.span().end + formula_offset },
                                  e.expected() );
            }
        }();
        Justification j =
            parse_justification( line.text.substr( semi + 1 ), line.offset + semi + 1, number, line_span );
        lines.push_back( { number, std::move( formula ), std::move( j ), line_span } );
    }

    std::vector< std::string > inferred;
    if ( !header.has_indices() ) {
        for ( const auto& p : header.order() )
            for ( const auto* id : { &p.lower, &p.upper } )
                if ( std::find( inferred.begin(), inferred.end(), id->text ) == inferred.end() )
                    inferred.push_back( id->text );
        for ( const auto& s : header.stable() )
            if ( std::find( inferred.begin(), inferred.end(), s.text ) == inferred.end() )
                inferred.push_back( s.text );
        for ( const auto& l : lines ) {
            collect_indices( l.formula, inferred );
            if ( const auto* nec = std::get_if< Necessitation >( &l.justification ) )
                if ( std::find( inferred.begin(), inferred.end(), nec->index ) == inferred.end() )
                    inferred.push_back( nec->index );
        }
        // Purely propositional scripts still need a carrier.
        if ( inferred.empty() )
            inferred.push_back( "a" );
    }

    return Derivation{ std::move( lines ), AxiomProfile::section2, header.build( inferred ), true };
}

std::string print_proof( const Derivation& d )
{
    std::string out = print_poset( d.poset );
    for ( const auto& l : d.lines )
        out += std::to_string( l.number ) + ". " + print_formula( l.formula ) + " ; " + to_string( l.justification )
             + '\n';
    return out;
}

} // namespace sal
