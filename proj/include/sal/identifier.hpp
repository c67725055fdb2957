#pragma once

#include <string_view>

namespace sal {

// [a-zA-Z_][a-zA-Z0-9_]*
[[nodiscard]] constexpr bool is_identifier_start( char c )
{
    return ( c >= 'a' && c <= 'z' ) || ( c >= 'A' && c <= 'Z' ) || c == '_';
}

[[nodiscard]] constexpr bool is_identifier_char( char c )
{
    return is_identifier_start( c ) || ( c >= '0' && c <= '9' );
}

[[nodiscard]] constexpr bool is_identifier( std::string_view s )
{
    if ( s.empty() || !is_identifier_start( s.front() ) )
        return false;
    for ( char c : s )
        if ( !is_identifier_char( c ) )
            return false;
    return true;
}

} // namespace sal
