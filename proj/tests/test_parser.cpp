#include "generators.hpp"
#include "support.hpp"

#include "sal/errors.hpp"
#include "sal/parser.hpp"

#include <doctest.h>

using namespace sal;

TEST_CASE( "parse formula examples" )
{
    CHECK( parse_formula( "<beta> p" ) == diamond( "beta", atom( "p" ) ) );
    CHECK( parse_formula( "p" ) == atom( "p" ) );
    const Formula p = atom( "p" ), q = atom( "q" );
    CHECK( parse_formula( "[a](p -> q) -> ([a]p -> [a]q)" )
           == implication( box( "a", implication( p, q ) ), implication( box( "a", p ), box( "a", q ) ) ) );
}

TEST_CASE( "precedence and associativity" )
{
    const Formula p = atom( "p" ), q = atom( "q" ), r = atom( "r" );
    CHECK( parse_formula( "p & q | r" ) == disjunction( conjunction( p, q ), r ) );
    CHECK( parse_formula( "p | q & r" ) == disjunction( p, conjunction( q, r ) ) );
    CHECK( parse_formula( "p -> q -> r" ) == implication( p, implication( q, r ) ) );
    CHECK( parse_formula( "p & q & r" ) == conjunction( conjunction( p, q ), r ) );
    CHECK( parse_formula( "~[a]<b>p" ) == negation( box( "a", diamond( "b", p ) ) ) );
    CHECK( parse_formula( "[a]p & q" ) == conjunction( box( "a", p ), q ) );
}

TEST_CASE( "print formula examples" )
{
    const Formula p = atom( "p" ), q = atom( "q" );
    CHECK( print_formula( diamond( "beta", p ) ) == "<beta> p" );
    CHECK( print_formula( negation( negation( p ) ) ) == "~~p" );
    CHECK( print_formula( implication( p, implication( q, p ) ) ) == "p -> q -> p" );
    CHECK( print_formula( implication( implication( p, q ), p ) ) == "(p -> q) -> p" );
    CHECK( print_formula( conjunction( p, disjunction( q, p ) ) ) == "p & (q | p)" );
}

TEST_CASE( "parse errors carry spans and expectations" )
{
    for ( const char* bad : { "", "p &", "(p", "p q", "[a p", "<1>p", "p -> ", ")", "~", "[]p", "p && q" } ) {
        CAPTURE( bad );
        try {
            (void)parse_formula( bad );
            FAIL( "expected a parse error" );
        } catch ( const ParseError& e ) {
            CHECK( e.span().start <= e.span().end );
            CHECK( e.span().end <= std::string_view( bad ).size() );
            CHECK_FALSE( e.expected().empty() );
        }
    }
}

TEST_CASE( "formula round trip" )
{
    gen::Rng rng( 2024 );
    for ( int round = 0; round < 1000; ++round ) {
        const Formula f = gen::formula( rng, 1 + gen::pick( rng, 8 ), { "p", "q", "r_1" }, { "a", "beta", "Z" } );
        const std::string text = print_formula( f );
        CAPTURE( text );
        CHECK( parse_formula( text ) == f );
    }
}

TEST_CASE( "parsing is total on fuzzed input" )
{
    gen::Rng rng( 99 );
    const std::string alphabet = "pq[]<>()~&|-> ab\n\t#\xff\xc3";
    for ( int round = 0; round < 3000; ++round ) {
        std::string text;
        const std::size_t n = gen::pick( rng, 24 );
        for ( std::size_t i = 0; i < n; ++i )
            text += alphabet[ gen::pick( rng, alphabet.size() ) ];
        try {
            (void)parse_formula( text );
        } catch ( const ParseError& e ) {
            CHECK( e.span().start <= e.span().end );
            CHECK( e.span().end <= text.size() );
        }
        try {
            (void)parse_model( text );
        } catch ( const Error& ) {
        }
        try {
            (void)parse_proof( text );
        } catch ( const Error& ) {
        }
    }
}

TEST_CASE( "deep nesting is a diagnostic, not a crash" )
{
    std::string deep( 5000, '(' );
    deep += "p";
    deep += std::string( 5000, ')' );
    CHECK_THROWS_AS( (void)parse_formula( deep ), ParseError );
    CHECK_THROWS_AS( (void)parse_formula( std::string( 5000, '~' ) + "p" ), ParseError );
}

TEST_CASE( "the illustrative model parses" )
{
    const StratifiedModel m = support::illustrative();
    CHECK( m.poset().names() == std::vector< std::string >{ "alpha", "beta", "gamma" } );
    CHECK( m.poset().leq( "alpha", "gamma" ) );
    CHECK( m.worlds() == std::vector< std::string >{ "w0", "w1", "w2" } );
    CHECK( m.relation( "alpha" ).pairs() == std::vector< Pair >{ { 0, 0 } } );
    CHECK( m.relation( "beta" ).pairs() == std::vector< Pair >{ { 1, 0 }, { 1, 1 } } );
    CHECK( m.relation( "gamma" ).pairs() == std::vector< Pair >{ { 2, 1 }, { 2, 2 } } );
    CHECK( m.holds( "p", 0 ) );
    CHECK_FALSE( m.holds( "p", 1 ) );
    CHECK( m.world_order()->contains( 0, 2 ) );
}

TEST_CASE( "minimal model and declaration errors" )
{
    const StratifiedModel m = parse_model( "indices: a\nworlds: w\n" );
    CHECK( m.world_count() == 1 );
    CHECK( m.relation( "a" ).empty() );
    CHECK( m.valuation().empty() );

    CHECK_THROWS_AS( (void)parse_model( "indices: a\nworlds: w\nrel b: w->w\n" ), UndeclaredIdentifier );
    CHECK_THROWS_AS( (void)parse_model( "indices: a\nworlds: w\nval p: v\n" ), UndeclaredIdentifier );
    CHECK_THROWS_AS( (void)parse_model( "worlds: w\n" ), ParseError );
    CHECK_THROWS_AS( (void)parse_model( "indices: a\n" ), ParseError );
    CHECK_THROWS_AS( (void)parse_model( "indices: a\nworlds:\n" ), Error );
    CHECK_THROWS_AS( (void)parse_model( "indices: a b\norder: a <= b b <= a\nworlds: w\n" ), CycleError );
    CHECK_THROWS_AS( (void)parse_model( "indices: a\nworlds: w\nbogus: 1\n" ), ParseError );
}

TEST_CASE( "repeated rel and val lines union" )
{
    const StratifiedModel m = parse_model( "indices: a\nworlds: u v\nrel a: u->v\nrel a: v->v\nval p: u\nval p: v\n" );
    CHECK( m.relation( "a" ).count() == 2 );
    CHECK( m.holds( "p", 0 ) );
    CHECK( m.holds( "p", 1 ) );
}

TEST_CASE( "model round trip" )
{
    gen::Rng rng( 77 );
    for ( int round = 0; round < 200; ++round ) {
        const ModelSpec spec = gen::model_spec( rng, 4, { "p", "q" }, true, 1 + gen::pick( rng, 3 ) );
        const StratifiedModel m = build_model( spec );
        const std::string text = print_model( m );
        CAPTURE( text );
        CHECK( parse_model( text ) == m );
        CHECK( print_model( parse_model( text ) ) == text );
    }
}

TEST_CASE( "printed models use the file format" )
{
    const std::string text = print_model( support::illustrative() );
    CHECK( text.find( "indices: alpha beta gamma\n" ) == 0 );
    CHECK( text.find( "order: alpha<=beta beta<=gamma\n" ) != std::string::npos );
    CHECK( text.find( "rel beta: w1->w0 w1->w1\n" ) != std::string::npos );
    CHECK( text.find( "val p: w0\n" ) != std::string::npos );
    CHECK( text.find( '\r' ) == std::string::npos );
}

TEST_CASE( "parse proof examples" )
{
    const Derivation d = parse_proof( "1. p -> p ; A1\n2. [a](p -> p) ; NEC a 1" );
    REQUIRE( d.lines.size() == 2 );
    CHECK( std::get< AxiomTag >( d.lines[ 0 ].justification ) == AxiomTag::a1 );
    const auto nec = std::get< Necessitation >( d.lines[ 1 ].justification );
    CHECK( nec.index == "a" );
    CHECK( nec.premise_line == 1 );
    CHECK( d.lines[ 1 ].formula == box( "a", parse_formula( "p -> p" ) ) );

    CHECK_THROWS_AS( (void)parse_proof( "1. q ; MP 2 3" ), ForwardReference );

    const Derivation a2 = parse_proof( "1. [a]p -> [b]p ; A2" );
    REQUIRE( a2.lines.size() == 1 );
    CHECK( std::get< AxiomTag >( a2.lines[ 0 ].justification ) == AxiomTag::a2 );
    CHECK( a2.poset.names() == std::vector< std::string >{ "a", "b" } );
}

TEST_CASE( "proof scripts with a poset header" )
{
    const Derivation d = parse_proof( "indices: a b\norder: a <= b\nstable: a\n# comment\n\n1. [a]p -> [b]p ; A2\n" );
    CHECK( d.poset.leq( "a", "b" ) );
    CHECK( d.poset.is_stable( "a" ) );
    CHECK( d.lines.size() == 1 );
}

TEST_CASE( "proof script errors" )
{
    CHECK_THROWS_AS( (void)parse_proof( "1. p ; A7" ), ParseError );
    CHECK_THROWS_AS( (void)parse_proof( "1. p" ), ParseError );
    CHECK_THROWS_AS( (void)parse_proof( "2. p ; A1" ), ParseError );
    CHECK_THROWS_AS( (void)parse_proof( "1. p ; MP 1 1" ), ForwardReference );
    CHECK_THROWS_AS( (void)parse_proof( "1. p ; MP x 1" ), ParseError );
    CHECK_THROWS_AS( (void)parse_proof( "1. p & ; A1" ), ParseError );
    CHECK_THROWS_AS( (void)parse_proof( "1. p ; A1\nindices: a\n" ), ParseError );
}

TEST_CASE( "proof round trip" )
{
    gen::Rng rng( 3 );
    for ( int round = 0; round < 50; ++round ) {
        const Derivation d = gen::derivation( rng, 8 );
        const Derivation back = parse_proof( print_proof( d ) );
        REQUIRE( back.lines.size() == d.lines.size() );
        for ( std::size_t i = 0; i < d.lines.size(); ++i ) {
            CHECK( back.lines[ i ].formula == d.lines[ i ].formula );
            CHECK( to_string( back.lines[ i ].justification ) == to_string( d.lines[ i ].justification ) );
        }
        CHECK( back.poset == d.poset );
    }
}
