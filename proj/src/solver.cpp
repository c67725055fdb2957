#include "sal/solver.hpp"

#include "sal/errors.hpp"
#include "sal/parser.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace sal {
namespace {

using Mask = std::uint64_t;

std::string index_name( std::size_t i )
{
    if ( i < 26 )
        return std::string( 1, static_cast< char >( 'a' + i ) );
    return "i" + std::to_string( i );
}

// Flat labeling program over world bitmasks; ops are in subformula order.
struct Op
{
    Connective kind;
    std::size_t lhs = 0;
    std::size_t rhs = 0;
    std::size_t slot = 0; // atom slot, or index position for modal ops
};

std::vector< Op > compile( const Formula& f, const IndexPoset& poset, const std::vector< std::string >& atoms )
{
    auto subs = subformulas( f );
    std::map< Formula, std::size_t > slot;
    std::vector< Op > ops;
    for ( const auto& g : subs ) {
        Op op{ g.kind() };
        if ( g.is_atom() )
            op.slot = static_cast< std::size_t >( std::find( atoms.begin(), atoms.end(), g.label() ) - atoms.begin() );
        else {
            op.lhs = slot.at( g.left() );
            if ( g.is_binary() )
                op.rhs = slot.at( g.right() );
            if ( g.is_modal() )
                op.slot = poset.position( g.label() );
        }
        slot.emplace( g, ops.size() );
        ops.push_back( op );
    }
    return ops;
}

struct Block
{
    std::size_t worlds;
    std::size_t poset;
    Mask stable;
};

struct Hit
{
    std::size_t block;
    std::vector< Mask > relations;
    Mask valuation;
    std::size_t world;
};

bool is_subset( Mask a, Mask b ) { return ( a & ~b ) == 0; }

class Search
{
public:
    Search( const Formula& f, const SearchBounds& bounds, const FramePolicy& policy ) : _policy( policy )
    {
        if ( bounds.max_worlds == 0 || ( !bounds.fixed_poset && bounds.max_indices == 0 ) )
            throw std::invalid_argument( "search bounds must be at least 1" );

        std::set< std::string > atom_set( bounds.atoms.begin(), bounds.atoms.end() );
        for ( const auto& a : atoms_of( f ) )
            atom_set.insert( a );
        _atoms.assign( atom_set.begin(), atom_set.end() );

        std::vector< std::string > required = bounds.required_stable;
        std::vector< IndexPoset > candidates;
        if ( bounds.fixed_poset ) {
            for ( const auto& s : bounds.fixed_poset->stable_names() )
                required.push_back( s );
            candidates.push_back( *bounds.fixed_poset );
        }
        else
            candidates = enumerate_posets( bounds.max_indices );

        const auto needed = indices_of( f );
        std::optional< std::string > missing;
        for ( auto& p : candidates ) {
            auto lacks = [ & ]( const std::string& i ) {
                if ( p.find( i ) )
                    return false;
                if ( !missing )
                    missing = i;
                return true;
            };
            if ( std::any_of( needed.begin(), needed.end(), lacks )
                 || std::any_of( required.begin(), required.end(), lacks ) )
                continue;
            Mask req = 0;
            for ( const auto& s : required )
                req |= Mask{ 1 } << p.position( s );
            _required.push_back( req );
            _programs.push_back( compile( f, p, _atoms ) );
            _posets.push_back( p.with_stable( {} ) );
        }
        if ( _posets.empty() )
            throw UndeclaredIdentifier( "index", missing.value_or( "?" ) );

        long double estimate = 0;
        for ( std::size_t nw = 1; nw <= bounds.max_worlds; ++nw ) {
            for ( std::size_t p = 0; p < _posets.size(); ++p ) {
                const std::size_t k = _posets[ p ].size();
                std::vector< Mask > stables;
                for ( Mask s = 0; s < ( Mask{ 1 } << k ); ++s )
                    if ( is_subset( _required[ p ], s ) && ( policy.require_stable_reflexive || s == _required[ p ] ) )
                        stables.push_back( s );
                estimate += static_cast< long double >( stables.size() )
                          * std::pow( 2.0L, static_cast< long double >( nw * nw * k + nw * _atoms.size() ) );
                for ( Mask s : stables )
                    _blocks.push_back( { nw, p, s } );
            }
        }
        _estimate = estimate;
        _ceiling = bounds.ceiling;
        _too_large = estimate > bounds.ceiling || bounds.max_worlds * bounds.max_worlds > 62
                  || bounds.max_worlds * _atoms.size() > 62;
        if ( _too_large )
            return;

        std::uint64_t offset = 0;
        for ( const auto& b : _blocks ) {
            _offsets.push_back( offset );
            offset += Mask{ 1 } << ( b.worlds * b.worlds );
        }
        _units = offset;
    }

    [[nodiscard]] long double estimate() const { return _estimate; }

    std::optional< Hit > run( std::size_t workers ) const
    {
        if ( _too_large )
            throw BoundsTooLarge( _estimate, _ceiling );
        std::atomic< std::uint64_t > next{ 0 };
        std::atomic< std::uint64_t > best{ _units };
        std::mutex mutex;
        std::map< std::uint64_t, Hit > hits;

        auto work = [ & ] {
            std::vector< Mask > scratch;
            for ( ;; ) {
                const std::uint64_t unit = next.fetch_add( 1 );
                if ( unit >= _units || unit > best.load() )
                    return;
                if ( auto hit = run_unit( unit, scratch ) ) {
                    std::lock_guard lock( mutex );
                    hits.emplace( unit, std::move( *hit ) );
                    std::uint64_t current = best.load();
                    while ( unit < current && !best.compare_exchange_weak( current, unit ) ) {}
                }
            }
        };

        if ( workers <= 1 )
            work();
        else {
            std::vector< std::thread > pool;
            for ( std::size_t i = 0; i < workers; ++i )
                pool.emplace_back( work );
            for ( auto& t : pool )
                t.join();
        }
        if ( hits.empty() )
            return std::nullopt;
        return hits.begin()->second;
    }

    StratifiedModel build( const Hit& hit ) const
    {
        const Block& b = _blocks[ hit.block ];
        const IndexPoset& p = _posets[ b.poset ];
        std::vector< std::string > stable;
        for ( std::size_t i = 0; i < p.size(); ++i )
            if ( ( b.stable >> i ) & 1 )
                stable.push_back( p.name( i ) );
        std::vector< std::string > worlds;
        for ( std::size_t w = 0; w < b.worlds; ++w )
            worlds.push_back( "w" + std::to_string( w ) );
        std::vector< Relation > relations;
        for ( Mask r : hit.relations ) {
            Relation rel( b.worlds );
            for ( std::size_t u = 0; u < b.worlds; ++u )
                for ( std::size_t v = 0; v < b.worlds; ++v )
                    if ( ( r >> ( u * b.worlds + v ) ) & 1 )
                        rel.insert( u, v );
            relations.push_back( std::move( rel ) );
        }
        std::map< std::string, WorldSet > valuation;
        for ( std::size_t a = 0; a < _atoms.size(); ++a ) {
            WorldSet set( b.worlds, false );
            for ( std::size_t w = 0; w < b.worlds; ++w )
                set[ w ] = ( hit.valuation >> ( a * b.worlds + w ) ) & 1;
            valuation.emplace( _atoms[ a ], std::move( set ) );
        }
        return StratifiedModel( p.with_stable( stable ), std::move( worlds ), std::move( relations ),
                                std::move( valuation ) );
    }


private:
    std::optional< Hit > run_unit( std::uint64_t unit, std::vector< Mask >& scratch ) const
    {
        auto it = std::upper_bound( _offsets.begin(), _offsets.end(), unit );
        const std::size_t block = static_cast< std::size_t >( it - _offsets.begin() ) - 1;
        const Block& b = _blocks[ block ];
        Frame frame{ b, _posets[ b.poset ], _programs[ b.poset ], {} };
        frame.relations.assign( frame.poset.size(), 0 );
        frame.relations[ 0 ] = unit - _offsets[ block ];
        if ( !admissible( frame, 0 ) )
            return std::nullopt;
        std::optional< Hit > hit;
        extend( frame, 1, scratch, hit );
        if ( hit )
            hit->block = block;
        return hit;
    }

    struct Frame
    {
        const Block& block;
        const IndexPoset& poset;
        const std::vector< Op >& program;
        std::vector< Mask > relations;
    };

    // Stability and coherence of relations[ j ] against relations[ 0..j ).
    bool admissible( const Frame& frame, std::size_t j ) const
    {
        const std::size_t nw = frame.block.worlds;
        const Mask r = frame.relations[ j ];
        if ( _policy.require_stable_reflexive && ( ( frame.block.stable >> j ) & 1 ) ) {
            for ( std::size_t w = 0; w < nw; ++w )
                if ( !( ( r >> ( w * nw + w ) ) & 1 ) )
                    return false;
        }
        if ( _policy.coherence == CoherenceMode::none )
            return true;
        const bool shrink = _policy.coherence == CoherenceMode::shrink;
        for ( std::size_t i = 0; i < j; ++i ) {
            const Mask q = frame.relations[ i ];
            if ( frame.poset.leq( i, j ) && !( shrink ? is_subset( r, q ) : is_subset( q, r ) ) )
                return false;
            if ( frame.poset.leq( j, i ) && !( shrink ? is_subset( q, r ) : is_subset( r, q ) ) )
                return false;
        }
        return true;
    }

    void extend( Frame& frame, std::size_t j, std::vector< Mask >& scratch, std::optional< Hit >& hit ) const
    {
        if ( hit )
            return;
        if ( j == frame.poset.size() ) {
            scan_valuations( frame, scratch, hit );
            return;
        }
        const std::size_t nw = frame.block.worlds;
        const Mask limit = Mask{ 1 } << ( nw * nw );
        for ( Mask r = 0; r < limit && !hit; ++r ) {
            frame.relations[ j ] = r;
            if ( admissible( frame, j ) )
                extend( frame, j + 1, scratch, hit );
        }
    }

    void scan_valuations( const Frame& frame, std::vector< Mask >& labels, std::optional< Hit >& hit ) const
    {
        const std::size_t nw = frame.block.worlds;
        const std::size_t k = frame.poset.size();
        const Mask full = ( Mask{ 1 } << nw ) - 1;

        std::vector< Mask > succ( k * nw );
        for ( std::size_t i = 0; i < k; ++i )
            for ( std::size_t u = 0; u < nw; ++u )
                succ[ i * nw + u ] = ( frame.relations[ i ] >> ( u * nw ) ) & full;

        const auto& program = frame.program;
        labels.resize( program.size() );
        const Mask valuations = Mask{ 1 } << ( nw * _atoms.size() );
        for ( Mask val = 0; val < valuations; ++val ) {
            for ( std::size_t s = 0; s < program.size(); ++s ) {
                const Op& op = program[ s ];
                Mask out = 0;
                switch ( op.kind ) {
                case Connective::atom: out = ( val >> ( op.slot * nw ) ) & full; break;
                case Connective::negation: out = ~labels[ op.lhs ] & full; break;
                case Connective::conjunction: out = labels[ op.lhs ] & labels[ op.rhs ]; break;
                case Connective::disjunction: out = labels[ op.lhs ] | labels[ op.rhs ]; break;
                case Connective::implication: out = ( ~labels[ op.lhs ] | labels[ op.rhs ] ) & full; break;
                case Connective::box: {
                    const Mask body = labels[ op.lhs ];
                    for ( std::size_t u = 0; u < nw; ++u )
                        if ( is_subset( succ[ op.slot * nw + u ], body ) )
                            out |= Mask{ 1 } << u;
                    break;
                }
                case Connective::diamond: {
                    const Mask body = labels[ op.lhs ];
                    for ( std::size_t u = 0; u < nw; ++u )
                        if ( succ[ op.slot * nw + u ] & body )
                            out |= Mask{ 1 } << u;
                    break;
                }
                }
                labels[ s ] = out;
            }
            const Mask root = labels.back();
            if ( root != full ) {
                hit = Hit{ 0, frame.relations, val, static_cast< std::size_t >( std::countr_zero( ~root & full ) ) };
                return;
            }
        }
    }

    FramePolicy _policy;
    std::vector< std::string > _atoms;
    std::vector< IndexPoset > _posets;
    std::vector< Mask > _required;
    std::vector< std::vector< Op > > _programs;
    std::vector< Block > _blocks;
    std::vector< std::uint64_t > _offsets;
    std::uint64_t _units = 0;
    long double _estimate = 0;
    long double _ceiling = 0;
    bool _too_large = false;
};

} // namespace

std::vector< IndexPoset > enumerate_posets( std::size_t max_indices )
{
    std::vector< IndexPoset > out;
    for ( std::size_t n = 1; n <= max_indices; ++n ) {
        std::vector< std::string > names;
        for ( std::size_t i = 0; i < n; ++i )
            names.push_back( index_name( i ) );
        std::vector< Pair > slots;
        for ( std::size_t i = 0; i < n; ++i )
            for ( std::size_t j = i + 1; j < n; ++j )
                slots.emplace_back( i, j );
        if ( slots.size() > 20 )
            throw BoundsTooLarge( std::pow( 2.0L, static_cast< long double >( slots.size() ) ), 1 << 20 );
        for ( Mask m = 0; m < ( Mask{ 1 } << slots.size() ); ++m ) {
            // keep only strict orders that are already transitive
            Relation strict( n );
            std::vector< IndexPair > gens;
            for ( std::size_t s = 0; s < slots.size(); ++s )
                if ( ( m >> s ) & 1 ) {
                    strict.insert( slots[ s ].first, slots[ s ].second );
                    gens.emplace_back( names[ slots[ s ].first ], names[ slots[ s ].second ] );
                }
            if ( !strict.is_transitive() )
                continue;
            out.emplace_back( names, gens );
        }
    }
    return out;
}

long double estimate_models( const Formula& f, const SearchBounds& bounds, const FramePolicy& policy )
{
    return Search( f, bounds, policy ).estimate();
}

Verdict decide_valid( const Formula& f, const SearchBounds& bounds, const FramePolicy& policy,
                      const SearchOptions& options )
{
    Search search( f, bounds, policy );
    auto hit = search.run( options.workers );
    if ( !hit )
        return ValidUpTo{ bounds };
    StratifiedModel model = search.build( *hit );
    std::string world = model.world( hit->world );
    std::string index = model.poset().name( 0 );
    return Counterexample{ std::move( model ), std::move( world ), std::move( index ) };
}

Verdict decide_sat( const Formula& f, const SearchBounds& bounds, const FramePolicy& policy,
                    const SearchOptions& options )
{
    Verdict v = decide_valid( negation( f ), bounds, policy, options );
    if ( auto* c = std::get_if< Counterexample >( &v ) )
        return Satisfiable{ std::move( c->model ), std::move( c->world ), std::move( c->index ) };
    return UnsatUpTo{ bounds };
}

bool is_affirmative( const Verdict& v )
{
    return std::holds_alternative< ValidUpTo >( v ) || std::holds_alternative< Satisfiable >( v );
}

std::string poset_label( const IndexPoset& poset )
{
    std::string out;
    for ( std::size_t i = 0; i < poset.size(); ++i )
        out += ( i ? "," : "" ) + poset.name( i );
    auto cover = covering_pairs( poset.order() );
    for ( std::size_t i = 0; i < cover.size(); ++i )
        out += ( i ? "," : ";" ) + poset.name( cover[ i ].first ) + "<=" + poset.name( cover[ i ].second );
    return out;
}

namespace {

std::string bounds_text( const SearchBounds& b )
{
    std::string out = "max_worlds=" + std::to_string( b.max_worlds );
    if ( b.fixed_poset )
        out += ", poset=" + poset_label( *b.fixed_poset );
    else
        out += ", max_indices=" + std::to_string( b.max_indices );
    return out;
}

std::string witness_text( const char* kind, const StratifiedModel& m, const std::string& world,
                          const std::string& index )
{
    return std::string( "# " ) + kind + " at world " + world + " under index " + index + '\n' + print_model( m );
}

} // namespace

std::string print_verdict( const Verdict& v )
{
    if ( const auto* valid = std::get_if< ValidUpTo >( &v ) )
        return "ValidUpTo(" + bounds_text( valid->bounds ) + ")\n";
    if ( const auto* unsat = std::get_if< UnsatUpTo >( &v ) )
        return "UnsatUpTo(" + bounds_text( unsat->bounds ) + ")\n";
    if ( const auto* c = std::get_if< Counterexample >( &v ) )
        return witness_text( "Counterexample", c->model, c->world, c->index );
    const auto& s = std::get< Satisfiable >( v );
    return witness_text( "Satisfiable", s.model, s.world, s.index );
}

std::string_view to_string( Schema s )
{
    switch ( s ) {
    case Schema::k: return "K";
    case Schema::a2: return "A2";
    case Schema::a3: return "A3";
    case Schema::a4: return "A4";
    case Schema::ddown: return "DDOWN";
    }
    return "?";
}

std::vector< MatrixRow > axiom_matrix( const MatrixOptions& options )
{
    const Formula p = atom( "p" );
    const Formula q = atom( "q" );
    std::vector< MatrixRow > rows;

    for ( const auto& poset : enumerate_posets( options.max_indices ) ) {
        struct Instance
        {
            Schema schema;
            std::string lower, upper;
            Formula formula;
        };
        std::vector< Instance > instances;
        for ( Schema schema : options.schemas ) {
            for ( std::size_t i = 0; i < poset.size(); ++i ) {
                const std::string& a = poset.name( i );
                if ( schema == Schema::k ) {
                    instances.push_back( { schema, a, a,
                                           implication( box( a, implication( p, q ) ),
                                                        implication( box( a, p ), box( a, q ) ) ) } );
                    continue;
                }
                if ( schema == Schema::a3 ) {
                    instances.push_back( { schema, a, a, implication( box( a, p ), p ) } );
                    continue;
                }
                for ( std::size_t j = 0; j < poset.size(); ++j ) {
                    if ( !poset.leq( i, j ) )
                        continue;
                    const std::string& b = poset.name( j );
                    Formula f = schema == Schema::a2   ? implication( box( a, p ), box( b, p ) )
                              : schema == Schema::a4   ? implication( diamond( a, p ), diamond( b, p ) )
                                                       : implication( diamond( b, p ), diamond( a, p ) );
                    instances.push_back( { schema, a, b, std::move( f ) } );
                }
            }
        }

        for ( const auto& inst : instances )
            for ( CoherenceMode mode : options.modes )
                for ( bool refl : options.stable_reflexive ) {
                    SearchBounds bounds;
                    bounds.max_worlds = options.max_worlds;
                    bounds.max_indices = poset.size();
                    bounds.fixed_poset = poset;
                    bounds.ceiling = options.ceiling;
                    if ( inst.schema == Schema::a3 )
                        bounds.required_stable = { inst.lower };
                    FramePolicy policy{ mode, refl, false };
                    rows.push_back( { inst.schema, poset_label( poset ), inst.lower, inst.upper, mode, refl,
                                      inst.formula, decide_valid( inst.formula, bounds, policy, options.search ) } );
                }
    }
    return rows;
}

bool schema_holds( const std::vector< MatrixRow >& rows, Schema schema, CoherenceMode mode, bool stable_reflexive )
{
    bool seen = false;
    for ( const auto& r : rows )
        if ( r.schema == schema && r.mode == mode && r.stable_reflexive == stable_reflexive ) {
            seen = true;
            if ( !std::holds_alternative< ValidUpTo >( r.verdict ) )
                return false;
        }
    return seen;
}

std::string print_matrix( const std::vector< MatrixRow >& rows )
{
    auto pad = []( std::string s, std::size_t width ) {
        if ( s.size() < width )
            s.append( width - s.size(), ' ' );
        return s;
    };
    std::string out = pad( "schema", 7 ) + pad( "poset", 12 ) + pad( "indices", 10 ) + pad( "mode", 8 )
                    + pad( "stable", 8 ) + "verdict\n";
    for ( const auto& r : rows ) {
        std::string indices = r.lower == r.upper && ( r.schema == Schema::k || r.schema == Schema::a3 )
                                ? r.lower
                                : r.lower + "<=" + r.upper;
        out += pad( std::string( to_string( r.schema ) ), 7 ) + pad( r.poset, 12 ) + pad( indices, 10 )
             + pad( std::string( to_string( r.mode ) ), 8 ) + pad( r.stable_reflexive ? "refl" : "free", 8 );
        if ( std::holds_alternative< ValidUpTo >( r.verdict ) )
            out += "VALID";
        else {
            const auto& c = std::get< Counterexample >( r.verdict );
            out += "COUNTERMODEL " + std::to_string( c.model.world_count() ) + " worlds, fails at " + c.world;
        }
        out += '\n';
    }
    return out;
}

} // namespace sal
