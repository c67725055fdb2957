#pragma once

#include "sal/relation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sal {

using IndexPair = std::pair< std::string, std::string >;

// Finite partial order of admissibility indices together with the stable subset.
// Indices keep their declaration order; positions are used internally.
class IndexPoset
{
public:
    // Throws ModelError on empty/duplicate/malformed names, UndeclaredIdentifier
    // for unknown generator or stable members, CycleError on antisymmetry failure.
    IndexPoset( std::vector< std::string > indices,
                const std::vector< IndexPair >& order_generators = {},
                const std::vector< std::string >& stable = {} );

    [[nodiscard]] std::size_t size() const { return _names.size(); }
    [[nodiscard]] const std::vector< std::string >& names() const { return _names; }
    [[nodiscard]] const std::string& name( std::size_t position ) const { return _names[ position ]; }
    [[nodiscard]] std::optional< std::size_t > find( std::string_view name ) const;
    [[nodiscard]] std::size_t position( std::string_view name ) const; // throws UndeclaredIdentifier

    [[nodiscard]] bool leq( std::size_t lower, std::size_t upper ) const { return _order.contains( lower, upper ); }
    [[nodiscard]] bool leq( std::string_view lower, std::string_view upper ) const;
    [[nodiscard]] bool comparable( std::size_t a, std::size_t b ) const { return leq( a, b ) || leq( b, a ); }
    [[nodiscard]] const Relation& order() const { return _order; }

    [[nodiscard]] bool is_stable( std::size_t position ) const { return _stable[ position ]; }
    [[nodiscard]] bool is_stable( std::string_view name ) const;
    [[nodiscard]] std::vector< std::string > stable_names() const;

    // Same indices and order, different stable subset.
    [[nodiscard]] IndexPoset with_stable( const std::vector< std::string >& stable ) const;

    friend bool operator==( const IndexPoset&, const IndexPoset& ) = default;

private:
    std::vector< std::string > _names;
    Relation _order;
    std::vector< bool > _stable;
};

} // namespace sal
