#include "cli.hpp"

#include "sal/checker.hpp"
#include "sal/errors.hpp"
#include "sal/export.hpp"
#include "sal/parser.hpp"
#include "sal/proofs.hpp"
#include "sal/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace sal::cli {
namespace {

// Reported by subcommands that cannot proceed; carries exit status 2.
struct InputError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string read_file( const std::string& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw InputError( "cannot read '" + path + "'" );
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string location( const std::string& text, std::size_t offset )
{
    std::size_t line = 1, col = 1;
    for ( std::size_t i = 0; i < offset && i < text.size(); ++i ) {
        if ( text[ i ] == '\n' ) {
            ++line;
            col = 1;
        }
        else
            ++col;
    }
    return std::to_string( line ) + ':' + std::to_string( col );
}

// Runs a parser over a source, rewriting its diagnostics with line:column.
template < typename Parse >
auto parse_source( const std::string& name, const std::string& text, Parse parse )
{
    try {
        return parse( text );
    }
    catch ( const ParseError& e ) {
        std::string msg = name + ':' + location( text, e.span().start ) + ": " + e.what();
        if ( !e.expected().empty() ) {
            msg += " (expected";
            for ( const auto& x : e.expected() )
                msg += ' ' + x;
            msg += ')';
        }
        throw InputError( msg );
    }
    catch ( const UndeclaredIdentifier& e ) {
        throw InputError( name + ( e.span() ? ':' + location( text, e.span()->start ) : std::string() ) + ": "
                          + e.what() );
    }
    catch ( const ForwardReference& e ) {
        throw InputError( name + ':' + location( text, e.span().start ) + ": " + e.what() );
    }
    catch ( const Error& e ) {
        throw InputError( name + ": " + e.what() );
    }
}

StratifiedModel load_model( const std::string& path )
{
    return parse_source( path, read_file( path ), []( const std::string& t ) { return parse_model( t ); } );
}

Formula load_formula( const std::string& text )
{
    return parse_source( "formula", text, []( const std::string& t ) { return parse_formula( t ); } );
}

const std::map< std::string, CoherenceMode > coherence_names = {
    { "shrink", CoherenceMode::shrink }, { "grow", CoherenceMode::grow }, { "none", CoherenceMode::none } };

const std::map< std::string, AxiomProfile > profile_names = { { "section2", AxiomProfile::section2 },
                                                              { "section3", AxiomProfile::section3 } };

struct SearchArgs
{
    std::string formula;
    std::size_t max_worlds = 3;
    std::size_t max_indices = 2;
    std::string coherence = "shrink";
    std::string poset_file;
    std::vector< std::string > stable;
    bool stable_reflexive = true;
    std::size_t workers = 1;
    double ceiling = 1e9;
    std::string output;
};

void add_search_options( CLI::App* cmd, SearchArgs& a )
{
    cmd->add_option( "formula", a.formula, "Formula to decide" )->required();
    cmd->add_option( "--max-worlds", a.max_worlds, "Largest world count searched" )
        ->check( CLI::Range( 1, 7 ) )
        ->capture_default_str();
    cmd->add_option( "--max-indices", a.max_indices, "Largest enumerated poset" )
        ->check( CLI::Range( 1, 6 ) )
        ->capture_default_str();
    cmd->add_option( "--coherence", a.coherence, "shrink | grow | none" )
        ->check( CLI::IsMember( { "shrink", "grow", "none" } ) )
        ->capture_default_str();
    cmd->add_option( "--poset", a.poset_file, "Search only this poset (indices/order/stable file)" );
    cmd->add_option( "--stable", a.stable, "Indices every searched model declares stable" );
    cmd->add_flag( "--stable-reflexive,!--no-stable-reflexive", a.stable_reflexive,
                   "Require reflexive relations at stable indices" )
        ->capture_default_str();
    cmd->add_option( "--workers", a.workers, "Parallel search workers" )->check( CLI::PositiveNumber );
    cmd->add_option( "--ceiling", a.ceiling, "Refuse searches estimated above this many models" )
        ->capture_default_str();
    cmd->add_option( "-o,--output", a.output, "Also write the witness model to this file" );
}

int run_search( const SearchArgs& a, bool satisfiability, std::ostream& out )
{
    const Formula f = load_formula( a.formula );
    SearchBounds bounds;
    bounds.max_worlds = a.max_worlds;
    bounds.max_indices = a.max_indices;
    bounds.required_stable = a.stable;
    bounds.ceiling = a.ceiling;
    if ( !a.poset_file.empty() )
        bounds.fixed_poset = parse_source( a.poset_file, read_file( a.poset_file ),
                                           []( const std::string& t ) { return parse_poset( t ); } );
    const FramePolicy policy{ coherence_names.at( a.coherence ), a.stable_reflexive, false };

    Verdict v = [ & ] {
        try {
            return satisfiability ? decide_sat( f, bounds, policy, { a.workers } )
                                  : decide_valid( f, bounds, policy, { a.workers } );
        }
        catch ( const Error& e ) {
            throw InputError( e.what() );
        }
    }();
    out << "# formula: " << print_formula( f ) << '\n' << print_verdict( v );

    if ( !a.output.empty() ) {
        const StratifiedModel* model = nullptr;
        if ( auto* c = std::get_if< Counterexample >( &v ) )
            model = &c->model;
        else if ( auto* s = std::get_if< Satisfiable >( &v ) )
            model = &s->model;
        if ( model ) {
            std::ofstream file( a.output, std::ios::binary );
            if ( !file )
                throw InputError( "cannot write '" + a.output + "'" );
            file << print_model( *model );
        }
    }
    return is_affirmative( v ) ? affirmative : negative;
}

} // namespace

int run( const std::vector< std::string >& args, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Stratified modal logic toolkit: model checking, bounded validity, proof checking", "salkit" };
    app.require_subcommand( 1 );

    // check-model
    std::string model_file;
    std::string coherence = "shrink";
    bool strict = false;
    bool stable_reflexive = true;
    auto* check = app.add_subcommand( "check-model", "Validate a model's frame conditions" );
    check->add_option( "file", model_file, "Model file" )->required();
    check->add_option( "--coherence", coherence, "shrink | grow | none" )
        ->check( CLI::IsMember( { "shrink", "grow", "none" } ) );
    check->add_flag( "--strict", strict, "Violations are errors (exit 1)" );
    check->add_flag( "--stable-reflexive,!--no-stable-reflexive", stable_reflexive,
                     "Require reflexive relations at stable indices" );

    // eval
    std::string world, index, formula_text;
    bool trace = false;
    auto* evaluate = app.add_subcommand( "eval", "Evaluate a formula at a world" );
    evaluate->add_option( "file", model_file, "Model file" )->required();
    evaluate->add_option( "formula", formula_text, "Formula" )->required();
    evaluate->add_option( "--world", world, "World" )->required();
    evaluate->add_option( "--index", index, "Ambient index" )->required();
    evaluate->add_flag( "--trace", trace, "Print the evaluation tree" );

    // valid / sat
    SearchArgs valid_args, sat_args;
    auto* valid = app.add_subcommand( "valid", "Bounded validity with countermodel extraction" );
    add_search_options( valid, valid_args );
    auto* sat = app.add_subcommand( "sat", "Bounded satisfiability with witness extraction" );
    add_search_options( sat, sat_args );

    // prove
    std::string proof_file, poset_file;
    std::string profile = "section2";
    bool nec_stable_only = true;
    auto* prove = app.add_subcommand( "prove", "Check a Hilbert-style derivation" );
    prove->add_option( "file", proof_file, "Proof script" )->required();
    prove->add_option( "--profile", profile, "section2 | section3" )
        ->check( CLI::IsMember( { "section2", "section3" } ) );
    prove->add_flag( "--nec-stable-only,!--nec-any-index", nec_stable_only,
                     "Necessitation only at stable indices" );
    prove->add_option( "--poset", poset_file, "Override the script's poset header" );

    // axioms
    std::string axiom_profile = "all", axiom_coherence = "all";
    std::size_t axiom_worlds = 3, axiom_indices = 2, axiom_workers = 1;
    bool show_countermodels = false;
    auto* axioms = app.add_subcommand( "axioms", "Empirical axiom-validity matrix" );
    axioms->add_option( "--profile", axiom_profile, "all | section2 | section3" )
        ->check( CLI::IsMember( { "all", "section2", "section3" } ) );
    axioms->add_option( "--coherence", axiom_coherence, "all | shrink | grow | none" )
        ->check( CLI::IsMember( { "all", "shrink", "grow", "none" } ) );
    axioms->add_option( "--max-worlds", axiom_worlds, "Largest world count searched" )->check( CLI::Range( 1, 7 ) );
    axioms->add_option( "--max-indices", axiom_indices, "Largest enumerated poset" )->check( CLI::Range( 1, 6 ) );
    axioms->add_option( "--workers", axiom_workers, "Parallel search workers" )->check( CLI::PositiveNumber );
    axioms->add_flag( "--show-countermodels", show_countermodels, "Print every countermodel" );

    // export
    std::string format = "dot";
    std::string highlight;
    auto* exporter = app.add_subcommand( "export", "Export a model as a layered graph" );
    exporter->add_option( "file", model_file, "Model file" )->required();
    exporter->add_option( "--format", format, "Output format (dot)" );
    exporter->add_option( "--highlight", highlight, "Atom whose worlds are drawn as double circles" );

    std::vector< std::string > reversed( args.rbegin(), args.rend() );
    try {
        app.parse( reversed );
    }
    catch ( const CLI::CallForHelp& ) {
        out << app.help();
        return affirmative;
    }
    catch ( const CLI::CallForAllHelp& ) {
        out << app.help( "", CLI::AppFormatMode::All );
        return affirmative;
    }
    catch ( const CLI::ParseError& e ) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    try {
        if ( check->parsed() ) {
            const StratifiedModel m = load_model( model_file );
            const FramePolicy policy{ coherence_names.at( coherence ), stable_reflexive, strict };
            const auto violations = validate_frame( m, policy );
            for ( const auto& v : violations )
                out << describe( v ) << '\n';
            if ( violations.empty() ) {
                out << "ok\n";
                return affirmative;
            }
            out << violations.size() << " violation(s)" << ( strict ? "" : " (permissive)" ) << '\n';
            return strict ? negative : affirmative;
        }
        if ( evaluate->parsed() ) {
            const StratifiedModel m = load_model( model_file );
            const Formula f = load_formula( formula_text );
            std::optional< EvalTrace > t;
            bool verdict = false;
            try {
                verdict = eval( m, world, index, f, trace ? &t : nullptr );
            }
            catch ( const UndeclaredIdentifier& e ) {
                throw InputError( e.what() );
            }
            if ( t )
                out << print_trace( *t );
            out << ( verdict ? "true" : "false" ) << '\n';
            return verdict ? affirmative : negative;
        }
        if ( valid->parsed() )
            return run_search( valid_args, false, out );
        if ( sat->parsed() )
            return run_search( sat_args, true, out );
        if ( prove->parsed() ) {
            const std::string text = read_file( proof_file );
            Derivation d = parse_source( proof_file, text, []( const std::string& t ) { return parse_proof( t ); } );
            if ( !poset_file.empty() )
                d.poset = parse_source( poset_file, read_file( poset_file ),
                                        []( const std::string& t ) { return parse_poset( t ); } );
            d.profile = profile_names.at( profile );
            d.nec_requires_stable = nec_stable_only;
            const CheckReport report = check_derivation( d );
            out << print_report( report );
            return report.valid() ? affirmative : negative;
        }
        if ( axioms->parsed() ) {
            MatrixOptions opts;
            opts.max_worlds = axiom_worlds;
            opts.max_indices = axiom_indices;
            opts.search.workers = axiom_workers;
            if ( axiom_profile == "section2" )
                opts.schemas = { Schema::k, Schema::a2, Schema::a3, Schema::ddown };
            else if ( axiom_profile == "section3" )
                opts.schemas = { Schema::k, Schema::a2, Schema::a3, Schema::a4 };
            if ( axiom_coherence != "all" )
                opts.modes = { coherence_names.at( axiom_coherence ) };
            std::vector< MatrixRow > rows;
            try {
                rows = axiom_matrix( opts );
            }
            catch ( const Error& e ) {
                throw InputError( e.what() );
            }
            out << print_matrix( rows ) << '\n';
            for ( Schema s : opts.schemas )
                for ( CoherenceMode mode : opts.modes )
                    for ( bool refl : opts.stable_reflexive )
                        out << "summary " << to_string( s ) << ' ' << to_string( mode ) << ' '
                            << ( refl ? "refl" : "free" ) << ' '
                            << ( schema_holds( rows, s, mode, refl ) ? "VALID" : "COUNTERMODELED" ) << '\n';
            if ( show_countermodels )
                for ( const auto& r : rows )
                    if ( const auto* c = std::get_if< Counterexample >( &r.verdict ) )
                        out << "\n# " << to_string( r.schema ) << ' ' << to_string( r.mode ) << ' '
                            << ( r.stable_reflexive ? "refl" : "free" ) << ": " << print_formula( r.instance )
                            << '\n'
                            << print_verdict( r.verdict );
            return affirmative;
        }
        if ( exporter->parsed() ) {
            if ( format != "dot" )
                throw InputError( "unknown format '" + format + "' (supported: dot)" );
            const StratifiedModel m = load_model( model_file );
            out << to_dot( m, highlight.empty() ? std::nullopt : std::optional< std::string >( highlight ) );
            return affirmative;
        }
    }
    catch ( const InputError& e ) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    catch ( const std::exception& e ) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace sal::cli
