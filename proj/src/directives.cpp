#include "directives.hpp"

#include "sal/identifier.hpp"

#include <set>

namespace sal::detail {

std::vector< Line > split_lines( std::string_view text )
{
    std::vector< Line > out;
    std::size_t start = 0;
    while ( start <= text.size() ) {
        std::size_t end = text.find( '\n', start );
        if ( end == std::string_view::npos )
            end = text.size();
        std::string_view line = text.substr( start, end - start );
        if ( auto hash = line.find( '#' ); hash != std::string_view::npos )
            line = line.substr( 0, hash );
        if ( !line.empty() && line.back() == '\r' )
            line.remove_suffix( 1 );
        out.push_back( { line, start } );
        if ( end == text.size() )
            break;
        start = end + 1;
    }
    return out;
}

bool is_blank( std::string_view s )
{
    return s.find_first_not_of( " \t\r" ) == std::string_view::npos;
}

std::string_view leading_word( std::string_view s )
{
    std::size_t i = 0;
    while ( i < s.size() && ( s[ i ] == ' ' || s[ i ] == '\t' ) )
        ++i;
    std::size_t j = i;
    while ( j < s.size() && is_identifier_char( s[ j ] ) )
        ++j;
    return s.substr( i, j - i );
}

namespace {

struct Lexer
{
    std::string_view text;
    std::size_t offset;
    std::size_t pos = 0;

    void skip_space()
    {
        while ( pos < text.size() && ( text[ pos ] == ' ' || text[ pos ] == '\t' ) )
            ++pos;
    }

    bool at_end()
    {
        skip_space();
        return pos >= text.size();
    }

    SourceSpan here( std::size_t len = 0 ) const { return { offset + pos, offset + pos + len }; }

    std::optional< Located > identifier()
    {
        skip_space();
        if ( pos >= text.size() || !is_identifier_start( text[ pos ] ) )
            return std::nullopt;
        std::size_t start = pos;
        while ( pos < text.size() && is_identifier_char( text[ pos ] ) )
            ++pos;
        return Located{ std::string( text.substr( start, pos - start ) ), { offset + start, offset + pos } };
    }

    Located item()
    {
        skip_space();
        if ( auto id = identifier() )
            return *id;
        for ( std::string_view op : { "<=", "->" } )
            if ( text.substr( pos, 2 ) == op ) {
                Located l{ std::string( op ), here( 2 ) };
                pos += 2;
                return l;
            }
        std::size_t len = 1;
        while ( pos + len < text.size() && ( static_cast< unsigned char >( text[ pos + len ] ) & 0xC0 ) == 0x80 )
            ++len;
        throw ParseError( "unexpected '" + std::string( text.substr( pos, len ) ) + "'", here( len ),
                          { "identifier", "<=", "->" } );
    }
};

} // namespace

Directive parse_directive( const Line& line, bool keyword_takes_subject )
{
    Lexer lex{ line.text, line.offset };
    Directive d;
    d.line_span = { line.offset, line.offset + line.text.size() };
    auto keyword = lex.identifier();
    if ( !keyword )
        throw ParseError( "expected a directive", lex.here( lex.at_end() ? 0 : 1 ), { "directive keyword" } );
    d.keyword = *keyword;
    if ( keyword_takes_subject ) {
        d.subject = lex.identifier();
        if ( !d.subject )
            throw ParseError( "expected an identifier after '" + d.keyword.text + "'", lex.here(),
                              { "identifier" } );
    }
    lex.skip_space();
    if ( lex.pos >= lex.text.size() || lex.text[ lex.pos ] != ':' )
        throw ParseError( "expected ':'", lex.here( lex.pos < lex.text.size() ? 1 : 0 ), { ":" } );
    ++lex.pos;
    while ( !lex.at_end() )
        d.items.push_back( lex.item() );
    return d;
}

std::vector< Located > identifier_list( const Directive& d )
{
    for ( const auto& item : d.items )
        if ( !is_identifier( item.text ) )
            throw ParseError( "unexpected '" + item.text + "' in '" + d.keyword.text + "' list", item.span,
                              { "identifier" } );
    return d.items;
}

std::vector< LocatedPair > pair_list( const Directive& d, std::string_view op )
{
    std::vector< LocatedPair > out;
    const auto& items = d.items;
    std::size_t i = 0;
    while ( i < items.size() ) {
        auto expect_identifier = [ & ]( std::size_t k ) -> const Located& {
            if ( k >= items.size() )
                throw ParseError( "incomplete pair in '" + d.keyword.text + "'", { d.line_span.end, d.line_span.end },
                                  { "identifier" } );
            if ( !is_identifier( items[ k ].text ) )
                throw ParseError( "unexpected '" + items[ k ].text + "'", items[ k ].span, { "identifier" } );
            return items[ k ];
        };
        const Located& lower = expect_identifier( i );
        if ( i + 1 >= items.size() || items[ i + 1 ].text != op )
            throw ParseError( "expected '" + std::string( op ) + "'",
                              i + 1 < items.size() ? items[ i + 1 ].span
                                                   : SourceSpan{ d.line_span.end, d.line_span.end },
                              { std::string( op ) } );
        const Located& upper = expect_identifier( i + 2 );
        out.push_back( { lower, upper } );
        i += 3;
    }
    return out;
}

bool is_poset_keyword( std::string_view word )
{
    return word == "indices" || word == "order" || word == "stable";
}

bool PosetHeader::accept( const Directive& d )
{
    const auto& k = d.keyword.text;
    if ( k == "indices" ) {
        if ( _indices )
            throw ParseError( "duplicate 'indices' directive", d.keyword.span );
        _indices = identifier_list( d );
        std::set< std::string > seen;
        for ( const auto& id : *_indices )
            if ( !seen.insert( id.text ).second )
                throw ParseError( "duplicate index '" + id.text + "'", id.span );
        if ( _indices->empty() )
            throw ParseError( "index set must not be empty", d.line_span, { "identifier" } );
        return true;
    }
    if ( k == "order" ) {
        auto pairs = pair_list( d, "<=" );
        _order.insert( _order.end(), pairs.begin(), pairs.end() );
        return true;
    }
    if ( k == "stable" ) {
        auto ids = identifier_list( d );
        _stable.insert( _stable.end(), ids.begin(), ids.end() );
        return true;
    }
    return false;
}

IndexPoset PosetHeader::build( const std::vector< std::string >& fallback ) const
{
    std::vector< std::string > names;
    if ( _indices )
        for ( const auto& id : *_indices )
            names.push_back( id.text );
    else
        names = fallback;

    auto known = [ & ]( const Located& id ) {
        for ( const auto& n : names )
            if ( n == id.text )
                return;
        throw UndeclaredIdentifier( "index", id.text, id.span );
    };
    std::vector< IndexPair > order;
    for ( const auto& p : _order ) {
        known( p.lower );
        known( p.upper );
        order.emplace_back( p.lower.text, p.upper.text );
    }
    std::vector< std::string > stable;
    for ( const auto& s : _stable ) {
        known( s );
        stable.push_back( s.text );
    }
    return IndexPoset( std::move( names ), order, stable );
}

} // namespace sal::detail
