#include "sal/errors.hpp"

#include <sstream>

namespace sal {

ParseError::ParseError( const std::string& message, SourceSpan span, std::vector< std::string > expected )
    : Error( message ), _span( span ), _expected( std::move( expected ) )
{}

CycleError::CycleError( std::string first, std::string second )
    : Error( "order relation is cyclic: " + first + " <= " + second + " and " + second + " <= " + first ),
      _first( std::move( first ) ), _second( std::move( second ) )
{}

UndeclaredIdentifier::UndeclaredIdentifier( std::string kind, std::string identifier, std::optional< SourceSpan > span )
    : Error( "undeclared " + kind + " '" + identifier + "'" ),
      _kind( std::move( kind ) ), _identifier( std::move( identifier ) ), _span( span )
{}

ForwardReference::ForwardReference( std::size_t line, std::size_t cited, SourceSpan span )
    : Error( "line " + std::to_string( line ) + " cites line " + std::to_string( cited )
             + ", which does not precede it" ),
      _line( line ), _cited( cited ), _span( span )
{}

FrameViolation::FrameViolation( const std::string& message, std::size_t count )
    : Error( message ), _count( count )
{}

namespace {

std::string bounds_message( long double estimate, long double ceiling )
{
    std::ostringstream out;
    out << "search space of about " << static_cast< double >( estimate ) << " models exceeds the ceiling of "
        << static_cast< double >( ceiling );
    return out.str();
}

} // namespace

BoundsTooLarge::BoundsTooLarge( long double estimate, long double ceiling )
    : Error( bounds_message( estimate, ceiling ) ), _estimate( estimate )
{}

} // namespace sal
