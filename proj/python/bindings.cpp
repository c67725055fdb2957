#include "sal/checker.hpp"
#include "sal/errors.hpp"
#include "sal/export.hpp"
#include "sal/parser.hpp"
#include "sal/proofs.hpp"
#include "sal/solver.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sal;

namespace {

Formula as_formula( const py::object& f )
{
    if ( py::isinstance< py::str >( f ) )
        return parse_formula( f.cast< std::string >() );
    return f.cast< Formula >();
}

py::list pairs_of( const StratifiedModel& m, const Relation& r )
{
    py::list out;
    for ( const auto& [ u, v ] : r.pairs() )
        out.append( py::make_tuple( m.world( u ), m.world( v ) ) );
    return out;
}

py::dict verdict_dict( const Verdict& v )
{
    py::dict d;
    d[ "text" ] = print_verdict( v );
    d[ "affirmative" ] = is_affirmative( v );
    std::visit(
        [ & ]( const auto& x ) {
            using T = std::decay_t< decltype( x ) >;
            if constexpr ( std::is_same_v< T, ValidUpTo > )
                d[ "kind" ] = "ValidUpTo";
            else if constexpr ( std::is_same_v< T, UnsatUpTo > )
                d[ "kind" ] = "UnsatUpTo";
            else {
                d[ "kind" ] = std::is_same_v< T, Counterexample > ? "Counterexample" : "Satisfiable";
                d[ "model" ] = x.model;
                d[ "world" ] = x.world;
                d[ "index" ] = x.index;
            }
        },
        v );
    return d;
}

SearchBounds make_bounds( std::size_t max_worlds, std::size_t max_indices, const std::optional< std::string >& poset,
                          const std::vector< std::string >& stable )
{
    SearchBounds b;
    b.max_worlds = max_worlds;
    b.max_indices = max_indices;
    b.required_stable = stable;
    if ( poset )
        b.fixed_poset = parse_poset( *poset );
    return b;
}

} // namespace

PYBIND11_MODULE( _core, m )
{
    m.doc() = "Stratified modal logic toolkit";

    auto base = py::register_exception< Error >( m, "SalError" );
    py::register_exception< ParseError >( m, "ParseError", base.ptr() );
    py::register_exception< UndeclaredIdentifier >( m, "UndeclaredIdentifier", base.ptr() );
    py::register_exception< CycleError >( m, "CycleError", base.ptr() );
    py::register_exception< FrameViolation >( m, "FrameViolation", base.ptr() );
    py::register_exception< BoundsTooLarge >( m, "BoundsTooLarge", base.ptr() );

    py::enum_< CoherenceMode >( m, "CoherenceMode" )
        .value( "SHRINK", CoherenceMode::shrink )
        .value( "GROW", CoherenceMode::grow )
        .value( "NONE", CoherenceMode::none );

    py::enum_< AxiomProfile >( m, "AxiomProfile" )
        .value( "SECTION2", AxiomProfile::section2 )
        .value( "SECTION3", AxiomProfile::section3 );

    py::class_< Formula >( m, "Formula" )
        .def( "__str__", &print_formula )
        .def( "__repr__", []( const Formula& f ) { return "Formula('" + print_formula( f ) + "')"; } )
        .def( "__eq__", []( const Formula& a, const Formula& b ) { return a == b; } )
        .def( "__hash__", []( const Formula& f ) { return std::hash< std::string >{}( print_formula( f ) ); } )
        .def_property_readonly( "node_count", &Formula::node_count )
        .def( "subformulas", []( const Formula& f ) { return subformulas( f ); } );

    py::class_< FramePolicy >( m, "FramePolicy" )
        .def( py::init( []( CoherenceMode c, bool refl, bool strict ) { return FramePolicy{ c, refl, strict }; } ),
              py::arg( "coherence" ) = CoherenceMode::shrink, py::arg( "require_stable_reflexive" ) = true,
              py::arg( "strict" ) = false )
        .def_readwrite( "coherence", &FramePolicy::coherence )
        .def_readwrite( "require_stable_reflexive", &FramePolicy::require_stable_reflexive )
        .def_readwrite( "strict", &FramePolicy::strict );

    py::class_< StratifiedModel >( m, "StratifiedModel" )
        .def_property_readonly( "worlds", &StratifiedModel::worlds )
        .def_property_readonly( "indices", []( const StratifiedModel& s ) { return s.poset().names(); } )
        .def_property_readonly( "stable", []( const StratifiedModel& s ) { return s.poset().stable_names(); } )
        .def( "relation",
              []( const StratifiedModel& s, const std::string& index ) { return pairs_of( s, s.relation( index ) ); } )
        .def( "leq", []( const StratifiedModel& s, const std::string& a, const std::string& b ) {
            return s.poset().leq( a, b );
        } )
        .def( "__eq__", []( const StratifiedModel& a, const StratifiedModel& b ) { return a == b; } )
        .def( "__str__", &print_model );

    m.def( "parse_formula", &parse_formula, py::arg( "text" ) );
    m.def( "print_formula", &print_formula, py::arg( "formula" ) );
    m.def( "parse_model", &parse_model, py::arg( "text" ) );
    m.def( "print_model", &print_model, py::arg( "model" ) );

    m.def(
        "validate_frame",
        []( const StratifiedModel& model, const FramePolicy& policy ) {
            py::list out;
            for ( const auto& v : validate_frame( model, policy ) ) {
                py::dict d;
                d[ "kind" ] = std::string( to_string( v.kind ) );
                d[ "lower" ] = v.lower_index;
                d[ "upper" ] = v.upper_index;
                d[ "pair" ] = py::make_tuple( v.pair.first, v.pair.second );
                out.append( d );
            }
            return out;
        },
        py::arg( "model" ), py::arg( "policy" ) = FramePolicy{} );

    m.def(
        "eval",
        []( const StratifiedModel& model, const std::string& world, const std::string& index, const py::object& f,
            bool trace ) -> py::object {
            std::optional< EvalTrace > t;
            const bool v = eval( model, world, index, as_formula( f ), trace ? &t : nullptr );
            if ( trace )
                return py::make_tuple( v, print_trace( *t ) );
            return py::bool_( v );
        },
        py::arg( "model" ), py::arg( "world" ), py::arg( "index" ), py::arg( "formula" ), py::arg( "trace" ) = false );

    m.def(
        "is_admissible",
        []( const StratifiedModel& model, const std::string& world, const std::string& index, const py::object& f,
            const FramePolicy& policy ) { return is_admissible( model, world, index, as_formula( f ), policy ); },
        py::arg( "model" ), py::arg( "world" ), py::arg( "index" ), py::arg( "formula" ),
        py::arg( "policy" ) = FramePolicy{} );

    m.def(
        "check_proof",
        []( const std::string& text, AxiomProfile profile, bool nec_stable_only ) {
            Derivation d = parse_proof( text );
            d.profile = profile;
            d.nec_requires_stable = nec_stable_only;
            const CheckReport report = check_derivation( d );
            py::list lines;
            for ( const auto& l : report.lines )
                lines.append( py::make_tuple( l.number, l.accepted, std::string( to_string( l.reason ) ), l.detail ) );
            return py::make_tuple( report.valid(), lines );
        },
        py::arg( "text" ), py::arg( "profile" ) = AxiomProfile::section2, py::arg( "nec_stable_only" ) = true );

    auto search = [ & ]( const char* name, bool sat ) {
        m.def(
            name,
            [ sat ]( const py::object& f, std::size_t max_worlds, std::size_t max_indices, CoherenceMode coherence,
                     bool stable_reflexive, const std::optional< std::string >& poset,
                     const std::vector< std::string >& stable, std::size_t workers ) {
                const Formula formula = as_formula( f );
                const SearchBounds bounds = make_bounds( max_worlds, max_indices, poset, stable );
                const FramePolicy policy{ coherence, stable_reflexive, false };
                Verdict v;
                {
                    py::gil_scoped_release release;
                    v = sat ? decide_sat( formula, bounds, policy, { workers } )
                            : decide_valid( formula, bounds, policy, { workers } );
                }
                return verdict_dict( v );
            },
            py::arg( "formula" ), py::arg( "max_worlds" ) = 3, py::arg( "max_indices" ) = 2,
            py::arg( "coherence" ) = CoherenceMode::shrink, py::arg( "stable_reflexive" ) = true,
            py::arg( "poset" ) = py::none(), py::arg( "stable" ) = std::vector< std::string >{},
            py::arg( "workers" ) = 1 );
    };
    search( "decide_valid", false );
    search( "decide_sat", true );

    m.def(
        "axiom_matrix",
        []( std::size_t max_worlds, std::size_t max_indices, std::size_t workers ) {
            MatrixOptions opts;
            opts.max_worlds = max_worlds;
            opts.max_indices = max_indices;
            opts.search.workers = workers;
            std::vector< MatrixRow > rows;
            {
                py::gil_scoped_release release;
                rows = axiom_matrix( opts );
            }
            py::list out;
            for ( const auto& r : rows ) {
                py::dict d;
                d[ "schema" ] = std::string( to_string( r.schema ) );
                d[ "poset" ] = r.poset;
                d[ "lower" ] = r.lower;
                d[ "upper" ] = r.upper;
                d[ "mode" ] = r.mode;
                d[ "stable_reflexive" ] = r.stable_reflexive;
                d[ "instance" ] = print_formula( r.instance );
                d[ "verdict" ] = verdict_dict( r.verdict );
                out.append( d );
            }
            return out;
        },
        py::arg( "max_worlds" ) = 3, py::arg( "max_indices" ) = 2, py::arg( "workers" ) = 1 );

    m.def( "to_dot", &to_dot, py::arg( "model" ), py::arg( "highlight" ) = py::none() );
}
