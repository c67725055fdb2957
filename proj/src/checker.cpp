#include "sal/checker.hpp"

#include "sal/errors.hpp"
#include "sal/parser.hpp"

#include <algorithm>
#include <map>

namespace sal {

std::string_view to_string( ViolationKind kind )
{
    switch ( kind ) {
    case ViolationKind::coherence_inclusion: return "coherence";
    case ViolationKind::stable_not_reflexive: return "stable-reflexivity";
    case ViolationKind::world_order: return "world-order";
    }
    return "?";
}

std::string describe( const Violation& v )
{
    return std::string( to_string( v.kind ) ) + ' ' + v.lower_index + "<=" + v.upper_index + ' ' + v.pair.first
         + "->" + v.pair.second;
}

std::vector< Violation > validate_frame( const StratifiedModel& m, const FramePolicy& policy )
{
    std::vector< Violation > out;
    const auto& poset = m.poset();
    const std::size_t k = poset.size();

    if ( policy.coherence != CoherenceMode::none )
        for ( std::size_t lo = 0; lo < k; ++lo )
            for ( std::size_t hi = 0; hi < k; ++hi ) {
                if ( lo == hi || !poset.leq( lo, hi ) )
                    continue;
                // shrink: R_hi must be inside R_lo; grow: R_lo inside R_hi
                const bool shrink = policy.coherence == CoherenceMode::shrink;
                const Relation& inner = m.relation( shrink ? hi : lo );
                const Relation& outer = m.relation( shrink ? lo : hi );
                for ( const auto& [ u, v ] : inner.pairs() )
                    if ( !outer.contains( u, v ) )
                        out.push_back( { ViolationKind::coherence_inclusion, poset.name( lo ), poset.name( hi ),
                                         { m.world( u ), m.world( v ) } } );
            }

    if ( policy.require_stable_reflexive )
        for ( std::size_t i = 0; i < k; ++i ) {
            if ( !poset.is_stable( i ) )
                continue;
            for ( std::size_t w = 0; w < m.world_count(); ++w )
                if ( !m.relation( i ).contains( w, w ) )
                    out.push_back( { ViolationKind::stable_not_reflexive, poset.name( i ), poset.name( i ),
                                     { m.world( w ), m.world( w ) } } );
        }

    if ( const auto& order = m.world_order() ) {
        // The constructor already insists on a partial order; report the
        // first broken law should a model ever get here otherwise.
        const std::size_t n = m.world_count();
        for ( std::size_t a = 0; a < n; ++a ) {
            if ( !order->contains( a, a ) )
                out.push_back( { ViolationKind::world_order, "", "", { m.world( a ), m.world( a ) } } );
            for ( std::size_t b = a + 1; b < n; ++b )
                if ( order->contains( a, b ) && order->contains( b, a ) )
                    out.push_back( { ViolationKind::world_order, "", "", { m.world( a ), m.world( b ) } } );
        }
    }
    return out;
}

Evaluator::Evaluator( const StratifiedModel& m, const Formula& f ) : _model( &m ), _subformulas( subformulas( f ) )
{
    const std::size_t n = m.world_count();
    std::map< Formula, std::size_t > slot;
    _labels.reserve( _subformulas.size() );
    for ( std::size_t s = 0; s < _subformulas.size(); ++s ) {
        const Formula& g = _subformulas[ s ];
        slot.emplace( g, s );
        WorldSet out( n, false );
        auto child = [ & ]( const Formula& c ) -> const WorldSet& { return _labels[ slot.at( c ) ]; };
        switch ( g.kind() ) {
        case Connective::atom:
            if ( auto it = m.valuation().find( g.label() ); it != m.valuation().end() )
                out = it->second;
            break;
        case Connective::negation: {
            const auto& a = child( g.operand() );
            for ( std::size_t w = 0; w < n; ++w )
                out[ w ] = !a[ w ];
            break;
        }
        case Connective::conjunction:
        case Connective::disjunction:
        case Connective::implication: {
            const auto& a = child( g.left() );
            const auto& b = child( g.right() );
            for ( std::size_t w = 0; w < n; ++w )
                out[ w ] = g.kind() == Connective::conjunction   ? ( a[ w ] && b[ w ] )
                         : g.kind() == Connective::disjunction ? ( a[ w ] || b[ w ] )
                                                               : ( !a[ w ] || b[ w ] );
            break;
        }
        case Connective::box:
        case Connective::diamond: {
            const Relation& r = m.relation( m.poset().position( g.label() ) );
            const auto& a = child( g.operand() );
            const bool universal = g.kind() == Connective::box;
            for ( std::size_t w = 0; w < n; ++w ) {
                bool value = universal;
                for ( std::size_t v = 0; v < n; ++v )
                    if ( r.contains( w, v ) && a[ v ] != universal ) {
                        value = !universal;
                        break;
                    }
                out[ w ] = value;
            }
            break;
        }
        }
        _labels.push_back( std::move( out ) );
    }
}

const WorldSet& Evaluator::extension( const Formula& sub ) const
{
    auto it = std::find( _subformulas.begin(), _subformulas.end(), sub );
    if ( it == _subformulas.end() )
        throw std::out_of_range( "not a subformula: " + print_formula( sub ) );
    return _labels[ static_cast< std::size_t >( it - _subformulas.begin() ) ];
}

EvalTrace Evaluator::trace( std::size_t world, const std::string& index ) const
{
    return trace( _subformulas.back(), world, index );
}

EvalTrace Evaluator::trace( const Formula& f, std::size_t world, const std::string& index ) const
{
    EvalTrace node{ _model->world( world ), index, f, extension( f )[ world ], std::nullopt, {} };
    switch ( f.kind() ) {
    case Connective::atom: break;
    case Connective::negation: node.children.push_back( trace( f.operand(), world, index ) ); break;
    case Connective::conjunction:
    case Connective::disjunction:
    case Connective::implication:
        node.children.push_back( trace( f.left(), world, index ) );
        node.children.push_back( trace( f.right(), world, index ) );
        break;
    case Connective::box:
    case Connective::diamond: {
        const Relation& r = _model->relation( f.label() );
        const auto& sub = extension( f.operand() );
        // A single successor decides a false box or a true diamond.
        const bool decided_by_witness = ( f.kind() == Connective::box ) != node.verdict;
        for ( std::size_t v : r.successors( world ) ) {
            if ( decided_by_witness ) {
                if ( sub[ v ] == node.verdict ) {
                    node.witness = _model->world( v );
                    node.children.push_back( trace( f.operand(), v, index ) );
                    break;
                }
            }
            else
                node.children.push_back( trace( f.operand(), v, index ) );
        }
        break;
    }
    }
    return node;
}

namespace {

void print_trace( const EvalTrace& t, std::size_t depth, std::string& out )
{
    out.append( depth * 2, ' ' );
    out += t.world + " |=_" + t.index + ' ' + print_formula( t.formula ) + " : " + ( t.verdict ? "true" : "false" );
    if ( t.witness )
        out += " (via " + *t.witness + ')';
    out += '\n';
    for ( const auto& c : t.children )
        print_trace( c, depth + 1, out );
}

} // namespace

std::string print_trace( const EvalTrace& trace )
{
    std::string out;
    print_trace( trace, 0, out );
    return out;
}

bool eval( const StratifiedModel& m, std::string_view world, std::string_view index, const Formula& f,
           std::optional< EvalTrace >* trace )
{
    const std::size_t w = m.world_position( world );
    (void)m.poset().position( index );
    Evaluator evaluator( m, f );
    if ( trace )
        *trace = evaluator.trace( w, std::string( index ) );
    return evaluator.holds( w );
}

bool is_admissible( const StratifiedModel& m, std::string_view world, std::string_view index, const Formula& f,
                    const FramePolicy& policy )
{
    if ( policy.strict ) {
        auto violations = validate_frame( m, policy );
        if ( !violations.empty() )
            throw FrameViolation( "frame violates the " + std::string( to_string( policy.coherence ) )
                                      + " policy: " + describe( violations.front() ),
                                  violations.size() );
    }
    return eval( m, world, index, diamond( std::string( index ), f ) );
}

} // namespace sal
