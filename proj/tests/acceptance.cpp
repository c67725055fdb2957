// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "generators.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include "cli.hpp"

#include "sal/checker.hpp"
#include "sal/parser.hpp"
#include "sal/proofs.hpp"
#include "sal/solver.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace sal;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome
{
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion( int n, const char* title, double budget_seconds, const std::function< Outcome() >& body )
{
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch ( const std::exception& e ) {
        o = { false, std::string( "exception: " ) + e.what() };
    }
    const double secs = std::chrono::duration< double >( Clock::now() - start ).count();
    if ( secs > budget_seconds ) {
        o.ok = false;
        o.detail += " (over the " + std::to_string( budget_seconds ) + " s budget)";
    }
    failures += !o.ok;
    std::printf( "%s criterion %d: %s [%.2f s] %s\n", o.ok ? "PASS" : "FAIL", n, title, secs, o.detail.c_str() );
    std::fflush( stdout );
}

std::pair< int, std::string > run_cli( const std::vector< std::string >& args )
{
    std::ostringstream out, err;
    const int status = cli::run( args, out, err );
    return { status, out.str() };
}

Violation coherence( std::string lower, std::string upper, std::string u, std::string v )
{
    return { ViolationKind::coherence_inclusion, std::move( lower ), std::move( upper ), { std::move( u ), std::move( v ) } };
}

Outcome illustrative_evaluation()
{
    const std::string file = support::model_path( "illustrative.salm" );
    const auto t = run_cli( { "eval", file, "--world", "w1", "--index", "beta", "<beta> p" } );
    const auto f = run_cli( { "eval", file, "--world", "w2", "--index", "gamma", "[gamma] p" } );
    const bool ok = t == std::pair< int, std::string >{ 0, "true\n" } && f == std::pair< int, std::string >{ 1, "false\n" };
    return { ok, "w1 beta <beta> p -> " + t.second.substr( 0, t.second.size() - 1 ) + "; w2 gamma [gamma] p -> "
                     + f.second.substr( 0, f.second.size() - 1 ) };
}

Outcome coherence_conflict()
{
    const StratifiedModel m = support::illustrative();
    const auto shrink = validate_frame( m, { CoherenceMode::shrink, true, false } );
    const auto grow = validate_frame( m, { CoherenceMode::grow, true, false } );
    const auto none = validate_frame( m, { CoherenceMode::none, true, false } );
    const bool ok =
        shrink
            == std::vector< Violation >{ coherence( "alpha", "beta", "w1", "w0" ), coherence( "alpha", "beta", "w1", "w1" ),
                                         coherence( "alpha", "gamma", "w2", "w1" ), coherence( "alpha", "gamma", "w2", "w2" ),
                                         coherence( "beta", "gamma", "w2", "w1" ), coherence( "beta", "gamma", "w2", "w2" ) }
        && grow
               == std::vector< Violation >{ coherence( "alpha", "beta", "w0", "w0" ), coherence( "alpha", "gamma", "w0", "w0" ),
                                            coherence( "beta", "gamma", "w1", "w0" ), coherence( "beta", "gamma", "w1", "w1" ) }
        && none.empty();
    return { ok, "shrink " + std::to_string( shrink.size() ) + ", grow " + std::to_string( grow.size() ) + ", none "
                     + std::to_string( none.size() ) + " violations" };
}

Outcome matrix()
{
    const auto rows = axiom_matrix( {} );
    std::size_t reverified = 0;
    for ( const auto& r : rows )
        if ( const auto* c = std::get_if< Counterexample >( &r.verdict ) ) {
            const FramePolicy p{ r.mode, r.stable_reflexive, false };
            if ( eval( c->model, c->world, c->index, r.instance ) || !validate_frame( c->model, p ).empty() )
                return { false, "countermodel for " + print_formula( r.instance ) + " does not replay" };
            ++reverified;
        }

    using M = CoherenceMode;
    struct Expect
    {
        Schema s;
        M mode;
        bool holds;
    };
    const std::vector< Expect > expected = {
        { Schema::a2, M::shrink, true },  { Schema::ddown, M::shrink, true }, { Schema::k, M::shrink, true },
        { Schema::a4, M::shrink, false }, { Schema::a4, M::grow, true },      { Schema::k, M::grow, true },
        { Schema::a2, M::grow, false },   { Schema::ddown, M::grow, false },  { Schema::k, M::none, true },
    };
    for ( const auto& e : expected )
        for ( bool refl : { true, false } )
            if ( schema_holds( rows, e.s, e.mode, refl ) != e.holds )
                return { false, std::string( to_string( e.s ) ) + " under " + std::string( to_string( e.mode ) ) };
    for ( M mode : { M::shrink, M::grow, M::none } )
        if ( !schema_holds( rows, Schema::a3, mode, true ) || schema_holds( rows, Schema::a3, mode, false ) )
            return { false, "A3 under " + std::string( to_string( mode ) ) };
    return { true, std::to_string( rows.size() ) + " cells, " + std::to_string( reverified ) + " countermodels replayed" };
}

Outcome soundness_sweep()
{
    gen::Rng rng( 20240601 );
    const FramePolicy policy{ CoherenceMode::shrink, true, false };
    std::size_t formulas = 0;
    for ( int round = 0; round < 100; ++round ) {
        const Derivation d = gen::derivation( rng, 4 + gen::pick( rng, 5 ) );
        if ( !check_derivation( d ).valid() )
            return { false, "generated derivation rejected:\n" + print_proof( d ) };
        SearchBounds bounds;
        bounds.max_worlds = 3;
        bounds.fixed_poset = d.poset;
        for ( const auto& line : d.lines ) {
            ++formulas;
            if ( !std::holds_alternative< ValidUpTo >( decide_valid( line.formula, bounds, policy ) ) )
                return { false, "derived formula refuted: " + print_formula( line.formula ) };
        }
    }
    return { true, "100 derivations, " + std::to_string( formulas ) + " formulas ValidUpTo(3 worlds)" };
}

Outcome duality_and_oracle()
{
    gen::Rng rng( 5150 );
    const std::vector< std::string > atoms = { "p", "q" };
    std::size_t cases = 0;
    for ( int round = 0; round < 600; ++round ) {
        const ModelSpec spec = gen::model_spec( rng, 4, atoms, true, 1 + gen::pick( rng, 2 ) );
        const StratifiedModel m = build_model( spec );
        const oracle::PlainModel plain = oracle::from_spec( spec );
        const Formula f = gen::formula( rng, gen::pick( rng, 5 ), atoms, spec.indices );
        const std::string g = spec.indices[ gen::pick( rng, spec.indices.size() ) ];
        const Formula dia = diamond( g, f ), dual = negation( box( g, negation( f ) ) );
        for ( const auto& w : spec.worlds ) {
            ++cases;
            if ( eval( m, w, g, dia ) != eval( m, w, g, dual ) )
                return { false, "duality fails for " + print_formula( dia ) };
            if ( eval( m, w, g, f ) != oracle::holds( plain, w, f ) )
                return { false, "oracle disagrees on " + print_formula( f ) };
        }
    }
    return { cases >= 1000, std::to_string( cases ) + " cases" };
}

Outcome round_trips()
{
    gen::Rng rng( 8080 );
    for ( int i = 0; i < 1000; ++i ) {
        const Formula f = gen::formula( rng, 1 + gen::pick( rng, 8 ), { "p", "q", "r" }, { "a", "b", "gamma" } );
        if ( !( parse_formula( print_formula( f ) ) == f ) )
            return { false, "formula " + print_formula( f ) };
    }
    for ( int i = 0; i < 200; ++i ) {
        const StratifiedModel m = build_model( gen::model_spec( rng, 4, { "p", "q" }, true, 1 + gen::pick( rng, 3 ) ) );
        if ( !( parse_model( print_model( m ) ) == m ) )
            return { false, "model\n" + print_model( m ) };
    }
    return { true, "1000 formulas, 200 models" };
}

Outcome reproducibility()
{
    const std::vector< const char* > suite = {
        "<a>p -> <b>p",       "<b>p -> <a>p",        "[a]p -> [b]p",         "[b]p -> [a]p",
        "[a]p -> p",          "p | ~p",              "[a](p -> q) -> [a]p -> [a]q", "<a>p",
        "[a]p & <a>~p",       "<a><b>p -> <b><a>p",  "[a][a]p -> [a]p",      "[a]p -> [a][a]p",
        "<a>(p & q) -> <a>p", "<a>p & <a>q -> <a>(p & q)", "~[b]~p -> <b>p", "[a]p | [a]~p",
        "p -> [a]<a>p",       "<a>[b]p -> [b]<a>p",  "[b]p -> <b>p",         "~<a>p -> [a]~p",
    };
    const FramePolicy policy{ CoherenceMode::shrink, true, false };
    SearchBounds bounds;
    bounds.max_worlds = 3;
    for ( const char* text : suite ) {
        const Formula f = parse_formula( text );
        const std::string reference = print_verdict( decide_valid( f, bounds, policy, { 1 } ) );
        for ( int run = 0; run < 3; ++run )
            for ( std::size_t workers : { 1, 4 } )
                if ( print_verdict( decide_valid( f, bounds, policy, { workers } ) ) != reference )
                    return { false, std::string( "differs on " ) + text };
    }
    return { true, std::to_string( suite.size() ) + " formulas x 3 runs x workers {1,4}" };
}

} // namespace

int main()
{
    criterion( 1, "illustrative model evaluation", 1.0, illustrative_evaluation );
    criterion( 2, "coherence conflict witnesses", 1.0, coherence_conflict );
    criterion( 3, "axiom validity matrix at 3 worlds, 2 indices", 60.0, matrix );
    criterion( 4, "soundness sweep over fuzzed derivations", 300.0, soundness_sweep );
    criterion( 5, "diamond/box duality and naive evaluator agreement", 60.0, duality_and_oracle );
    criterion( 6, "formula and model round trips", 60.0, round_trips );
    criterion( 7, "solver determinism across runs and worker counts", 300.0, reproducibility );
    return failures == 0 ? 0 : 1;
}
