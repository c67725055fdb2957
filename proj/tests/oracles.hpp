#pragma once

// Test-only reference implementations. They work on plain name-based data and
// printed formulas so they stay independent of the library's evaluation paths.

#include "sal/config.hpp"
#include "sal/formula.hpp"
#include "sal/model.hpp"
#include "sal/parser.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct PlainModel
{
    std::vector< std::string > worlds;
    std::map< std::string, std::set< std::pair< std::string, std::string > > > rel;
    std::map< std::string, std::set< std::string > > val;
};

inline PlainModel from_spec( const sal::ModelSpec& spec )
{
    PlainModel m;
    m.worlds = spec.worlds;
    for ( const auto& i : spec.indices )
        m.rel[ i ];
    for ( const auto& [ i, pairs ] : spec.relations )
        m.rel[ i ].insert( pairs.begin(), pairs.end() );
    for ( const auto& [ a, ws ] : spec.valuation )
        m.val[ a ].insert( ws.begin(), ws.end() );
    return m;
}

inline PlainModel from_model( const sal::StratifiedModel& model )
{
    PlainModel m;
    m.worlds = model.worlds();
    for ( std::size_t i = 0; i < model.poset().size(); ++i ) {
        auto& r = m.rel[ model.poset().name( i ) ];
        for ( const auto& [ u, v ] : model.relation( i ).pairs() )
            r.emplace( model.world( u ), model.world( v ) );
    }
    for ( const auto& [ a, set ] : model.valuation() )
        for ( std::size_t w = 0; w < set.size(); ++w )
            if ( set[ w ] )
                m.val[ a ].insert( model.world( w ) );
    return m;
}

// Direct transcription of the truth conditions: no caching, no bitsets.
inline bool holds( const PlainModel& m, const std::string& w, const sal::Formula& f )
{
    using sal::Connective;
    switch ( f.kind() ) {
    case Connective::atom: {
        auto it = m.val.find( f.label() );
        return it != m.val.end() && it->second.contains( w );
    }
    case Connective::negation: return !holds( m, w, f.operand() );
    case Connective::conjunction: return holds( m, w, f.left() ) && holds( m, w, f.right() );
    case Connective::disjunction: return holds( m, w, f.left() ) || holds( m, w, f.right() );
    case Connective::implication: return !holds( m, w, f.left() ) || holds( m, w, f.right() );
    case Connective::box:
        for ( const auto& [ u, v ] : m.rel.at( f.label() ) )
            if ( u == w && !holds( m, v, f.operand() ) )
                return false;
        return true;
    case Connective::diamond:
        for ( const auto& [ u, v ] : m.rel.at( f.label() ) )
            if ( u == w && holds( m, v, f.operand() ) )
                return true;
        return false;
    }
    return false;
}

// Truth table over the printed forms of atoms and outermost modal subformulas.
inline void skeleton_keys( const sal::Formula& f, std::vector< std::string >& keys )
{
    if ( f.is_atom() || f.is_modal() ) {
        auto k = sal::print_formula( f );
        for ( const auto& x : keys )
            if ( x == k )
                return;
        keys.push_back( k );
        return;
    }
    skeleton_keys( f.left(), keys );
    if ( f.is_binary() )
        skeleton_keys( f.right(), keys );
}

inline bool skeleton_eval( const sal::Formula& f, const std::map< std::string, bool >& row )
{
    using sal::Connective;
    switch ( f.kind() ) {
    case Connective::negation: return !skeleton_eval( f.operand(), row );
    case Connective::conjunction: return skeleton_eval( f.left(), row ) && skeleton_eval( f.right(), row );
    case Connective::disjunction: return skeleton_eval( f.left(), row ) || skeleton_eval( f.right(), row );
    case Connective::implication: return !skeleton_eval( f.left(), row ) || skeleton_eval( f.right(), row );
    default: return row.at( sal::print_formula( f ) );
    }
}

inline bool truth_table_tautology( const sal::Formula& f )
{
    std::vector< std::string > keys;
    skeleton_keys( f, keys );
    for ( std::uint64_t bits = 0; bits < ( std::uint64_t{ 1 } << keys.size() ); ++bits ) {
        std::map< std::string, bool > row;
        for ( std::size_t i = 0; i < keys.size(); ++i )
            row[ keys[ i ] ] = ( bits >> i ) & 1;
        if ( !skeleton_eval( f, row ) )
            return false;
    }
    return true;
}

// Splits printed text at its top-level occurrence of op (outside parentheses).
inline std::optional< std::pair< std::string, std::string > > split_top( const std::string& s, const std::string& op )
{
    int depth = 0;
    for ( std::size_t i = 0; i < s.size(); ++i ) {
        if ( s[ i ] == '(' )
            ++depth;
        else if ( s[ i ] == ')' )
            --depth;
        else if ( depth == 0 && s.compare( i, op.size(), op ) == 0 )
            return std::make_pair( s.substr( 0, i ), s.substr( i + op.size() ) );
    }
    return std::nullopt;
}

// "<x> body" with body a single prefix-level unit -> (x, body)
inline std::optional< std::pair< std::string, std::string > > strip_modal( const std::string& s, char open, char close )
{
    if ( s.empty() || s[ 0 ] != open )
        return std::nullopt;
    auto end = s.find( close );
    if ( end == std::string::npos || end + 1 >= s.size() || s[ end + 1 ] != ' ' )
        return std::nullopt;
    std::string body = s.substr( end + 2 );
    for ( const char* op : { " & ", " | ", " -> " } )
        if ( split_top( body, op ) )
            return std::nullopt;
    return std::make_pair( s.substr( 1, end - 1 ), body );
}

// Text-level recognizer for "M x phi -> M y phi" with M the bracket pair
// open/close, returning (x, y).
inline std::optional< std::pair< std::string, std::string > > modal_pair( const sal::Formula& f, char open, char close )
{
    auto parts = split_top( sal::print_formula( f ), " -> " );
    if ( !parts )
        return std::nullopt;
    auto l = strip_modal( parts->first, open, close );
    auto r = strip_modal( parts->second, open, close );
    if ( !l || !r || l->second != r->second )
        return std::nullopt;
    return std::make_pair( l->first, r->first );
}

// Exhaustive search written from the definitions: every model over the given
// indices with up to max_worlds worlds and the atoms of f, filtered by a
// direct reading of the frame conditions. True iff f holds everywhere.
inline bool brute_valid( const sal::Formula& f, const std::vector< std::string >& indices,
                         const std::set< std::pair< std::string, std::string > >& strictly_below, sal::CoherenceMode mode,
                         bool stable_reflexive, std::size_t max_worlds,
                         const std::vector< std::string >& required_stable = {} )
{
    const auto atom_set = sal::atoms_of( f );
    const std::vector< std::string > atoms( atom_set.begin(), atom_set.end() );
    const std::size_t k = indices.size();
    for ( std::size_t n = 1; n <= max_worlds; ++n ) {
        PlainModel m;
        for ( std::size_t w = 0; w < n; ++w )
            m.worlds.push_back( "w" + std::to_string( w ) );
        const std::size_t pairs = n * n;
        const std::uint64_t rel_space = std::uint64_t{ 1 } << ( pairs * k );
        for ( std::uint64_t rbits = 0; rbits < rel_space; ++rbits ) {
            m.rel.clear();
            for ( std::size_t i = 0; i < k; ++i ) {
                auto& r = m.rel[ indices[ i ] ];
                for ( std::size_t e = 0; e < pairs; ++e )
                    if ( ( rbits >> ( i * pairs + e ) ) & 1 )
                        r.emplace( m.worlds[ e / n ], m.worlds[ e % n ] );
            }
            bool frame_ok = true;
            for ( const auto& [ lo, up ] : strictly_below ) {
                const auto& small = mode == sal::CoherenceMode::shrink ? m.rel[ up ] : m.rel[ lo ];
                const auto& large = mode == sal::CoherenceMode::shrink ? m.rel[ lo ] : m.rel[ up ];
                if ( mode != sal::CoherenceMode::none )
                    for ( const auto& e : small )
                        if ( !large.contains( e ) )
                            frame_ok = false;
            }
            if ( stable_reflexive )
                for ( const auto& s : required_stable )
                    for ( const auto& w : m.worlds )
                        if ( !m.rel[ s ].contains( { w, w } ) )
                            frame_ok = false;
            if ( !frame_ok )
                continue;
            const std::uint64_t val_space = std::uint64_t{ 1 } << ( n * atoms.size() );
            for ( std::uint64_t vbits = 0; vbits < val_space; ++vbits ) {
                m.val.clear();
                for ( std::size_t a = 0; a < atoms.size(); ++a )
                    for ( std::size_t w = 0; w < n; ++w )
                        if ( ( vbits >> ( a * n + w ) ) & 1 )
                            m.val[ atoms[ a ] ].insert( m.worlds[ w ] );
                for ( const auto& w : m.worlds )
                    if ( !holds( m, w, f ) )
                        return false;
            }
        }
    }
    return true;
}

} // namespace oracle
