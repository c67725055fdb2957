#include "sal/proofs.hpp"

#include "sal/errors.hpp"
#include "sal/parser.hpp"

#include <cstdint>
#include <map>

namespace sal {

bool tag_allowed( AxiomTag tag, AxiomProfile profile )
{
    if ( tag == AxiomTag::a4 )
        return profile == AxiomProfile::section3;
    if ( tag == AxiomTag::ddown )
        return profile == AxiomProfile::section2;
    return true;
}

namespace {

constexpr std::size_t max_skeleton_atoms = 24;

// Numbers the skeleton's atoms: real atoms and maximal modal subformulas.
void number_skeleton_atoms( const Formula& f, std::map< Formula, std::size_t >& vars )
{
    if ( f.is_atom() || f.is_modal() ) {
        vars.emplace( f, vars.size() );
        return;
    }
    number_skeleton_atoms( f.left(), vars );
    if ( f.is_binary() )
        number_skeleton_atoms( f.right(), vars );
}

bool skeleton_value( const Formula& f, const std::map< Formula, std::size_t >& vars, std::uint32_t row )
{
    switch ( f.kind() ) {
    case Connective::negation: return !skeleton_value( f.operand(), vars, row );
    case Connective::conjunction:
        return skeleton_value( f.left(), vars, row ) && skeleton_value( f.right(), vars, row );
    case Connective::disjunction:
        return skeleton_value( f.left(), vars, row ) || skeleton_value( f.right(), vars, row );
    case Connective::implication:
        return !skeleton_value( f.left(), vars, row ) || skeleton_value( f.right(), vars, row );
    default: return ( row >> vars.at( f ) ) & 1u;
    }
}

// f = [g] ( lhs ) -> [h] ( rhs ) with matching connective, returns (g, lhs, h, rhs)
struct ModalImplication
{
    std::string lower_label;
    const Formula* lower_body;
    std::string upper_label;
    const Formula* upper_body;
};

std::optional< ModalImplication > split_modal_implication( const Formula& f, Connective modality )
{
    if ( f.kind() != Connective::implication || f.left().kind() != modality || f.right().kind() != modality )
        return std::nullopt;
    return ModalImplication{ f.left().label(), &f.left().operand(), f.right().label(), &f.right().operand() };
}

bool indices_known( const Formula& f, const IndexPoset& poset )
{
    for ( const auto& i : indices_of( f ) )
        if ( !poset.find( i ) )
            return false;
    return true;
}

} // namespace

bool is_tautology_skeleton( const Formula& f )
{
    std::map< Formula, std::size_t > vars;
    number_skeleton_atoms( f, vars );
    if ( vars.size() > max_skeleton_atoms )
        throw Error( "propositional skeleton has too many atoms for a truth table" );
    const std::uint32_t rows = std::uint32_t{ 1 } << vars.size();
    for ( std::uint32_t row = 0; row < rows; ++row )
        if ( !skeleton_value( f, vars, row ) )
            return false;
    return true;
}

bool match_axiom( const Formula& f, AxiomTag tag, const IndexPoset& poset, AxiomProfile profile )
{
    if ( !tag_allowed( tag, profile ) )
        throw IllegalTagForProfile( std::string( to_string( tag ) ) + " is not an axiom of profile "
                                    + std::string( to_string( profile ) ) );
    if ( !indices_known( f, poset ) )
        return false;

    switch ( tag ) {
    case AxiomTag::a1: return is_tautology_skeleton( f );
    case AxiomTag::k: {
        // [g](phi -> psi) -> ([g]phi -> [g]psi)
        if ( f.kind() != Connective::implication || f.left().kind() != Connective::box
             || f.left().operand().kind() != Connective::implication )
            return false;
        const std::string& g = f.left().label();
        const Formula& phi = f.left().operand().left();
        const Formula& psi = f.left().operand().right();
        return f.right() == implication( box( g, phi ), box( g, psi ) );
    }
    case AxiomTag::a2: {
        auto m = split_modal_implication( f, Connective::box );
        return m && *m->lower_body == *m->upper_body && poset.leq( m->lower_label, m->upper_label );
    }
    case AxiomTag::a3:
        return f.kind() == Connective::implication && f.left().kind() == Connective::box
            && f.left().operand() == f.right() && poset.is_stable( f.left().label() );
    case AxiomTag::a4: {
        auto m = split_modal_implication( f, Connective::diamond );
        return m && *m->lower_body == *m->upper_body && poset.leq( m->lower_label, m->upper_label );
    }
    case AxiomTag::ddown: {
        // <beta> phi -> <alpha> phi with alpha <= beta
        auto m = split_modal_implication( f, Connective::diamond );
        return m && *m->lower_body == *m->upper_body && poset.leq( m->upper_label, m->lower_label );
    }
    }
    return false;
}

std::string_view to_string( RejectReason reason )
{
    switch ( reason ) {
    case RejectReason::none: return "ok";
    case RejectReason::not_an_instance: return "NotAnInstance";
    case RejectReason::illegal_tag_for_profile: return "IllegalTagForProfile";
    case RejectReason::undeclared_index: return "UndeclaredIndex";
    case RejectReason::cites_rejected_line: return "CitesRejectedLine";
    case RejectReason::modus_ponens_mismatch: return "ModusPonensMismatch";
    case RejectReason::necessitation_mismatch: return "NecessitationMismatch";
    case RejectReason::non_stable_necessitation: return "NonStableNecessitation";
    }
    return "?";
}

bool CheckReport::valid() const
{
    for ( const auto& l : lines )
        if ( !l.accepted )
            return false;
    return true;
}

CheckReport check_derivation( const Derivation& d )
{
    CheckReport report;
    auto reject = [ & ]( std::size_t number, RejectReason reason, std::string detail ) {
        report.lines.push_back( { number, false, reason, std::move( detail ) } );
    };
    // Citations are 1-based positions; parse_proof guarantees number == position.
    auto cited_ok = [ & ]( std::size_t n ) { return n >= 1 && n <= report.lines.size() && report.lines[ n - 1 ].accepted; };
    auto formula_at = [ & ]( std::size_t n ) -> const Formula& { return d.lines[ n - 1 ].formula; };

    for ( const auto& line : d.lines ) {
        const std::size_t n = line.number;
        bool undeclared = false;
        for ( const auto& i : indices_of( line.formula ) )
            if ( !d.poset.find( i ) ) {
                reject( n, RejectReason::undeclared_index, "index '" + i + "' is not in the poset" );
                undeclared = true;
                break;
            }
        if ( undeclared )
            continue;

        if ( const auto* tag = std::get_if< AxiomTag >( &line.justification ) ) {
            try {
                if ( match_axiom( line.formula, *tag, d.poset, d.profile ) )
                    report.lines.push_back( { n, true, RejectReason::none, {} } );
                else
                    reject( n, RejectReason::not_an_instance,
                            "not an instance of " + std::string( to_string( *tag ) ) );
            }
            catch ( const IllegalTagForProfile& e ) {
                reject( n, RejectReason::illegal_tag_for_profile, e.what() );
            }
            catch ( const Error& e ) {
                reject( n, RejectReason::not_an_instance, e.what() );
            }
        }
        else if ( const auto* mp = std::get_if< ModusPonens >( &line.justification ) ) {
            if ( !cited_ok( mp->antecedent_line ) || !cited_ok( mp->implication_line ) )
                reject( n, RejectReason::cites_rejected_line, "modus ponens cites a rejected or missing line" );
            else if ( formula_at( mp->implication_line ) != implication( formula_at( mp->antecedent_line ), line.formula ) )
                reject( n, RejectReason::modus_ponens_mismatch,
                        "line " + std::to_string( mp->implication_line ) + " is not line "
                            + std::to_string( mp->antecedent_line ) + " -> this line" );
            else
                report.lines.push_back( { n, true, RejectReason::none, {} } );
        }
        else {
            const auto& nec = std::get< Necessitation >( line.justification );
            if ( !cited_ok( nec.premise_line ) )
                reject( n, RejectReason::cites_rejected_line, "necessitation cites a rejected or missing line" );
            else if ( !d.poset.find( nec.index ) )
                reject( n, RejectReason::undeclared_index, "index '" + nec.index + "' is not in the poset" );
            else if ( line.formula != box( nec.index, formula_at( nec.premise_line ) ) )
                reject( n, RejectReason::necessitation_mismatch,
                        "expected [" + nec.index + "] applied to line " + std::to_string( nec.premise_line ) );
            else if ( d.nec_requires_stable && !d.poset.is_stable( nec.index ) )
                reject( n, RejectReason::non_stable_necessitation,
                        "necessitation at non-stable index '" + nec.index + "'" );
            else
                report.lines.push_back( { n, true, RejectReason::none, {} } );
        }
    }
    return report;
}

std::string print_report( const CheckReport& report )
{
    std::string out;
    for ( const auto& l : report.lines ) {
        out += std::to_string( l.number ) + ( l.accepted ? " ok" : " rejected " );
        if ( !l.accepted )
            out += std::string( to_string( l.reason ) ) + ": " + l.detail;
        out += '\n';
    }
    out += report.valid() ? "proof ok\n" : "proof rejected\n";
    return out;
}

} // namespace sal
