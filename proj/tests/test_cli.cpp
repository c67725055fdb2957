#include "support.hpp"

#include "cli.hpp"

#include "sal/checker.hpp"
#include "sal/parser.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace {

struct Result
{
    int status;
    std::string out;
    std::string err;
};

Result run( std::vector< std::string > args )
{
    std::ostringstream out, err;
    const int status = sal::cli::run( args, out, err );
    return { status, out.str(), err.str() };
}

std::string temp_file( const std::string& name, const std::string& contents )
{
    const auto path = std::filesystem::temp_directory_path() / ( "salkit_test_" + name );
    std::ofstream( path ) << contents;
    return path.string();
}

const std::string illustrative = support::model_path( "illustrative.salm" );

} // namespace

TEST_CASE( "eval subcommand" )
{
    auto r = run( { "eval", illustrative, "--world", "w1", "--index", "beta", "<beta> p" } );
    CHECK( r.status == 0 );
    CHECK( r.out == "true\n" );
    r = run( { "eval", illustrative, "--world", "w2", "--index", "gamma", "[gamma] p" } );
    CHECK( r.status == 1 );
    CHECK( r.out == "false\n" );
    r = run( { "eval", illustrative, "--world", "w9", "--index", "beta", "p" } );
    CHECK( r.status == 2 );
    CHECK_FALSE( r.err.empty() );
    r = run( { "eval", illustrative, "--world", "w1", "--index", "beta", "<beta> p &" } );
    CHECK( r.status == 2 );
    r = run( { "eval", illustrative, "--world", "w2", "--index", "gamma", "--trace", "[gamma] p" } );
    CHECK( r.status == 1 );
    CHECK( r.out.find( "w1" ) != std::string::npos );
}

TEST_CASE( "check-model subcommand" )
{
    CHECK( run( { "check-model", illustrative, "--coherence", "none" } ).status == 0 );
    auto r = run( { "check-model", illustrative, "--coherence", "shrink", "--strict" } );
    CHECK( r.status == 1 );
    CHECK( r.out.find( "coherence alpha<=beta w1->w0" ) != std::string::npos );
    r = run( { "check-model", illustrative, "--coherence", "grow" } );
    CHECK( r.status == 0 ); // permissive by default: reported, not fatal
    CHECK( r.out.find( "coherence alpha<=beta w0->w0" ) != std::string::npos );
    CHECK( run( { "check-model", support::model_path( "nope.salm" ) } ).status == 2 );
    CHECK( run( { "check-model", illustrative, "--coherence", "sideways" } ).status == 2 );
    for ( const char* shipped : { "temporal.salm", "decoherence.salm" } )
        CHECK( run( { "check-model", support::model_path( shipped ), "--strict" } ).status == 0 );
}

TEST_CASE( "valid and sat subcommands" )
{
    CHECK( run( { "valid", "p | ~p" } ).status == 0 );
    CHECK( run( { "valid", "--max-worlds", "0", "p" } ).status == 2 );
    CHECK( run( { "valid", "--max-indices", "0", "p" } ).status == 2 );
    CHECK( run( { "valid", "--ceiling", "5", "[a]p" } ).status == 2 );
    CHECK( run( { "sat", "[a]p & <a>~p" } ).status == 1 );
    CHECK( run( { "sat", "<a>p" } ).status == 0 );
}

TEST_CASE( "countermodels replay through eval" )
{
    const std::string poset = temp_file( "chain.salp", "indices: a b\norder: a <= b\n" );
    const auto r = run( { "valid", "<a>p -> <b>p", "--max-worlds", "2", "--coherence", "shrink", "--poset", poset } );
    REQUIRE( r.status == 1 );
    std::smatch m;
    REQUIRE( std::regex_search( r.out, m, std::regex( "Counterexample at world (\\w+) under index (\\w+)" ) ) );
    const std::string dumped = temp_file( "cm.salm", r.out );
    CHECK( run( { "check-model", dumped, "--coherence", "shrink", "--strict" } ).status == 0 );
    const auto replay = run( { "eval", dumped, "--world", m[ 1 ].str(), "--index", m[ 2 ].str(), "<a>p -> <b>p" } );
    CHECK( replay.status == 1 );
    CHECK( replay.out == "false\n" );
}

TEST_CASE( "prove subcommand" )
{
    const std::string good = temp_file( "good.salp", "indices: a\nstable: a\n1. p -> p ; A1\n2. [a](p -> p) ; NEC a 1\n" );
    auto r = run( { "prove", good } );
    CHECK( r.status == 0 );
    CHECK( r.out.find( "proof ok" ) != std::string::npos );

    const std::string unstable = temp_file( "unstable.salp", "indices: a\n1. p -> p ; A1\n2. [a](p -> p) ; NEC a 1\n" );
    r = run( { "prove", unstable, "--nec-stable-only" } );
    CHECK( r.status == 1 );
    CHECK( r.out.find( "NonStableNecessitation" ) != std::string::npos );
    CHECK( run( { "prove", unstable, "--nec-any-index" } ).status == 0 );

    const std::string malformed = temp_file( "bad.salp", "1. p -> p ; AXIOM\n" );
    r = run( { "prove", malformed } );
    CHECK( r.status == 2 );
    CHECK( r.err.find( ":1:" ) != std::string::npos );

    const std::string a4 = temp_file( "a4.salp", "indices: a b\norder: a <= b\n1. <a>p -> <b>p ; A4\n" );
    CHECK( run( { "prove", a4, "--profile", "section3" } ).status == 0 );
    CHECK( run( { "prove", a4, "--profile", "section2" } ).status == 1 );
}

TEST_CASE( "axioms subcommand" )
{
    auto r = run( { "axioms", "--max-worlds", "2", "--coherence", "none" } );
    CHECK( r.status == 0 );
    for ( const char* s : { "A2", "A4", "DDOWN" } )
        CHECK( r.out.find( std::string( "summary " ) + s + " none refl COUNTERMODELED" ) != std::string::npos );
    CHECK( r.out.find( "summary K none refl VALID" ) != std::string::npos );

    r = run( { "axioms", "--max-worlds", "2", "--max-indices", "1" } );
    for ( const char* mode : { "shrink", "grow", "none" } )
        for ( const char* s : { "A2", "A4", "DDOWN" } )
            CHECK( r.out.find( std::string( "summary " ) + s + " " + mode + " free VALID" ) != std::string::npos );
}

TEST_CASE( "export subcommand" )
{
    auto r = run( { "export", illustrative, "--format", "dot" } );
    CHECK( r.status == 0 );
    std::size_t clusters = 0, edges = 0;
    for ( std::size_t at = 0; ( at = r.out.find( "subgraph", at ) ) != std::string::npos; ++at )
        ++clusters;
    for ( std::size_t at = 0; ( at = r.out.find( "->", at ) ) != std::string::npos; ++at )
        ++edges;
    CHECK( clusters == 3 );
    CHECK( edges == 5 );
    CHECK( run( { "export", illustrative, "--format", "svg" } ).status == 2 );
}

TEST_CASE( "usage errors" )
{
    CHECK( run( {} ).status == 2 );
    CHECK( run( { "frobnicate" } ).status == 2 );
    CHECK( run( { "eval", illustrative } ).status == 2 );
}
