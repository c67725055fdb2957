#pragma once

#include "sal/derivation.hpp"
#include "sal/formula.hpp"
#include "sal/model.hpp"
#include "sal/poset.hpp"

#include <string>
#include <string_view>

namespace sal {

// Formula grammar, loosest binding last:
//   prefix   ~F  [a]F  <a>F     (right-nested chains)
//   F & G                       (left-assoc)
//   F | G                       (left-assoc)
//   F -> G                      (right-assoc)
// Throws ParseError.
[[nodiscard]] Formula parse_formula( std::string_view text );

// Minimal parenthesization; parse_formula( print_formula( f ) ) == f.
[[nodiscard]] std::string print_formula( const Formula& f );

// Line-oriented model file (indices/order/stable/worlds/worldorder/rel/val).
// Throws ParseError, CycleError, UndeclaredIdentifier.
[[nodiscard]] StratifiedModel parse_model( std::string_view text );
[[nodiscard]] std::string print_model( const StratifiedModel& m );

// Only the indices/order/stable directives; anything else is a ParseError.
[[nodiscard]] IndexPoset parse_poset( std::string_view text );
[[nodiscard]] std::string print_poset( const IndexPoset& poset );

// Proof script: optional indices/order/stable header, then lines
//   N. FORMULA ; A1 | K | A2 | A3 | A4 | DDOWN | MP i j | NEC a i
// Without an `indices:` header the poset is the antichain of the indices
// used, in order of first appearance.
// Throws ParseError, ForwardReference, CycleError, UndeclaredIdentifier.
[[nodiscard]] Derivation parse_proof( std::string_view text );
[[nodiscard]] std::string print_proof( const Derivation& d );

} // namespace sal
