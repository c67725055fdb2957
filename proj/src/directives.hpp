#pragma once

// Line lexing shared by the model, poset and proof readers.

#include "sal/errors.hpp"
#include "sal/poset.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sal::detail {

struct Located
{
    std::string text;
    SourceSpan span;
};

struct LocatedPair
{
    Located lower;
    Located upper;
};

struct Directive
{
    Located keyword;
    std::optional< Located > subject; // `rel a:` / `val p:`
    std::vector< Located > items;     // identifiers and operators after the colon
    SourceSpan line_span;
};

// A physical line of input with its comment stripped.
struct Line
{
    std::string_view text;
    std::size_t offset;
};

[[nodiscard]] std::vector< Line > split_lines( std::string_view text );
[[nodiscard]] bool is_blank( std::string_view s );

// Parses `keyword [subject] : items...`. Throws ParseError.
[[nodiscard]] Directive parse_directive( const Line& line, bool keyword_takes_subject );
[[nodiscard]] std::string_view leading_word( std::string_view s );

[[nodiscard]] std::vector< Located > identifier_list( const Directive& d );
[[nodiscard]] std::vector< LocatedPair > pair_list( const Directive& d, std::string_view op );

// Accumulates indices/order/stable directives and builds the poset.
class PosetHeader
{
public:
    // Returns false if the directive is not a poset directive.
    bool accept( const Directive& d );
    [[nodiscard]] bool has_indices() const { return _indices.has_value(); }
    [[nodiscard]] const std::vector< LocatedPair >& order() const { return _order; }
    [[nodiscard]] const std::vector< Located >& stable() const { return _stable; }

    // Index names default to `fallback` when no indices directive was seen.
    [[nodiscard]] IndexPoset build( const std::vector< std::string >& fallback = {} ) const;

private:
    std::optional< std::vector< Located > > _indices;
    std::vector< LocatedPair > _order;
    std::vector< Located > _stable;
};

[[nodiscard]] bool is_poset_keyword( std::string_view word );

} // namespace sal::detail
