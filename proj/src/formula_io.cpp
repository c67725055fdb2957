#include "sal/errors.hpp"
#include "sal/identifier.hpp"
#include "sal/parser.hpp"

#include <string>
#include <vector>

namespace sal {
namespace {

enum class Tok
{
    ident,
    tilde,
    amp,
    bar,
    arrow,
    lbracket,
    rbracket,
    lt,
    gt,
    lparen,
    rparen,
    end,
};

struct Token
{
    Tok kind;
    SourceSpan span;
    std::string_view text;
};

constexpr std::size_t max_nesting = 1000;

const std::vector< std::string > operand_start = { "identifier", "~", "[", "<", "(" };

class FormulaParser
{
public:
    explicit FormulaParser( std::string_view text ) : _text( text ) { advance(); }

    Formula parse()
    {
        if ( _tok.kind == Tok::end )
            throw ParseError( "empty formula", _tok.span, operand_start );
        Formula f = implication_level();
        if ( _tok.kind != Tok::end )
            fail( "unexpected '" + std::string( _tok.text ) + "'", { "&", "|", "->", "end of input" } );
        return f;
    }

private:
    [[noreturn]] void fail( const std::string& message, std::vector< std::string > expected ) const
    {
        throw ParseError( message, _tok.span, std::move( expected ) );
    }

    void advance()
    {
        while ( _pos < _text.size() && ( _text[ _pos ] == ' ' || _text[ _pos ] == '\t' || _text[ _pos ] == '\n'
                                         || _text[ _pos ] == '\r' ) )
            ++_pos;
        const std::size_t start = _pos;
        if ( _pos >= _text.size() ) {
            _tok = { Tok::end, { start, start }, {} };
            return;
        }
        const char c = _text[ _pos ];
        auto single = [ & ]( Tok kind ) {
            ++_pos;
            _tok = { kind, { start, _pos }, _text.substr( start, 1 ) };
        };
        if ( is_identifier_start( c ) ) {
            while ( _pos < _text.size() && is_identifier_char( _text[ _pos ] ) )
                ++_pos;
            _tok = { Tok::ident, { start, _pos }, _text.substr( start, _pos - start ) };
            return;
        }
        switch ( c ) {
        case '~': return single( Tok::tilde );
        case '&': return single( Tok::amp );
        case '|': return single( Tok::bar );
        case '[': return single( Tok::lbracket );
        case ']': return single( Tok::rbracket );
        case '<': return single( Tok::lt );
        case '>': return single( Tok::gt );
        case '(': return single( Tok::lparen );
        case ')': return single( Tok::rparen );
        case '-':
            if ( _pos + 1 < _text.size() && _text[ _pos + 1 ] == '>' ) {
                _pos += 2;
                _tok = { Tok::arrow, { start, _pos }, _text.substr( start, 2 ) };
                return;
            }
            break;
        default: break;
        }
        // Swallow a whole UTF-8 sequence so the span stays on a character boundary.
        std::size_t end = start + 1;
        while ( end < _text.size() && ( static_cast< unsigned char >( _text[ end ] ) & 0xC0 ) == 0x80 )
            ++end;
        throw ParseError( "unexpected character '" + std::string( _text.substr( start, end - start ) ) + "'",
                          { start, end }, { "identifier", "~", "&", "|", "->", "[", "]", "<", ">", "(", ")" } );
    }

    void expect( Tok kind, const char* spelling )
    {
        if ( _tok.kind != kind )
            fail( std::string( "expected '" ) + spelling + "'", { spelling } );
        advance();
    }

    void enter()
    {
        if ( ++_depth > max_nesting )
            fail( "formula nested too deeply", {} );
    }

    void check_depth( const Formula& f ) const
    {
        if ( f.depth() > max_nesting )
            fail( "formula nested too deeply", {} );
    }

    Formula implication_level()
    {
        enter();
        Formula lhs = disjunction_level();
        if ( _tok.kind == Tok::arrow ) {
            advance();
            lhs = implication( lhs, implication_level() );
        }
        --_depth;
        return lhs;
    }

    Formula disjunction_level()
    {
        Formula lhs = conjunction_level();
        while ( _tok.kind == Tok::bar ) {
            advance();
            lhs = disjunction( lhs, conjunction_level() );
            check_depth( lhs );
        }
        return lhs;
    }

    Formula conjunction_level()
    {
        Formula lhs = prefix_level();
        while ( _tok.kind == Tok::amp ) {
            advance();
            lhs = conjunction( lhs, prefix_level() );
            check_depth( lhs );
        }
        return lhs;
    }

    std::string modal_index( Tok close, const char* spelling )
    {
        advance();
        if ( _tok.kind != Tok::ident )
            fail( "expected an index identifier", { "identifier" } );
        std::string index( _tok.text );
        advance();
        expect( close, spelling );
        return index;
    }

    Formula prefix_level()
    {
        enter();
        Formula out = [ & ]() -> Formula {
            switch ( _tok.kind ) {
            case Tok::ident: {
                std::string name( _tok.text );
                advance();
                return atom( std::move( name ) );
            }
            case Tok::tilde: advance(); return negation( prefix_level() );
            case Tok::lbracket: {
                auto index = modal_index( Tok::rbracket, "]" );
                return box( std::move( index ), prefix_level() );
            }
            case Tok::lt: {
                auto index = modal_index( Tok::gt, ">" );
                return diamond( std::move( index ), prefix_level() );
            }
            case Tok::lparen: {
                advance();
                Formula inner = implication_level();
                expect( Tok::rparen, ")" );
                return inner;
            }
            case Tok::end: fail( "unexpected end of input", operand_start );
            default: fail( "unexpected '" + std::string( _tok.text ) + "'", operand_start );
            }
        }();
        --_depth;
        return out;
    }

    std::string_view _text;
    std::size_t _pos = 0;
    std::size_t _depth = 0;
    Token _tok{};
};

int precedence( const Formula& f )
{
    switch ( f.kind() ) {
    case Connective::implication: return 1;
    case Connective::disjunction: return 2;
    case Connective::conjunction: return 3;
    case Connective::negation:
    case Connective::box:
    case Connective::diamond: return 4;
    case Connective::atom: return 5;
    }
    return 0;
}

void print( const Formula& f, int min_prec, std::string& out )
{
    const bool parens = precedence( f ) < min_prec;
    if ( parens )
        out += '(';
    switch ( f.kind() ) {
    case Connective::atom: out += f.label(); break;
    case Connective::negation:
        out += '~';
        print( f.operand(), 4, out );
        break;
    case Connective::box:
        out += '[' + f.label() + "] ";
        print( f.operand(), 4, out );
        break;
    case Connective::diamond:
        out += '<' + f.label() + "> ";
        print( f.operand(), 4, out );
        break;
    case Connective::conjunction:
        print( f.left(), 3, out );
        out += " & ";
        print( f.right(), 4, out );
        break;
    case Connective::disjunction:
        print( f.left(), 2, out );
        out += " | ";
        print( f.right(), 3, out );
        break;
    case Connective::implication:
        print( f.left(), 2, out );
        out += " -> ";
        print( f.right(), 1, out );
        break;
    }
    if ( parens )
        out += ')';
}

} // namespace

Formula parse_formula( std::string_view text )
{
    return FormulaParser( text ).parse();
}

std::string print_formula( const Formula& f )
{
    std::string out;
    print( f, 0, out );
    return out;
}

} // namespace sal
