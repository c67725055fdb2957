#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sal {

// Byte offsets into the parsed text, half-open.
struct SourceSpan
{
    std::size_t start = 0;
    std::size_t end = 0;

    friend bool operator==( const SourceSpan&, const SourceSpan& ) = default;
};

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error
{
public:
    ParseError( const std::string& message, SourceSpan span, std::vector< std::string > expected = {} );

    [[nodiscard]] const SourceSpan& span() const { return _span; }
    [[nodiscard]] const std::vector< std::string >& expected() const { return _expected; }

private:
    SourceSpan _span;
    std::vector< std::string > _expected;
};

class CycleError : public Error
{
public:
    CycleError( std::string first, std::string second );

    [[nodiscard]] const std::string& first() const { return _first; }
    [[nodiscard]] const std::string& second() const { return _second; }

private:
    std::string _first;
    std::string _second;
};

class UndeclaredIdentifier : public Error
{
public:
    UndeclaredIdentifier( std::string kind, std::string identifier, std::optional< SourceSpan > span = {} );

    [[nodiscard]] const std::string& kind() const { return _kind; }
    [[nodiscard]] const std::string& identifier() const { return _identifier; }
    [[nodiscard]] const std::optional< SourceSpan >& span() const { return _span; }

private:
    std::string _kind;
    std::string _identifier;
    std::optional< SourceSpan > _span;
};

class ForwardReference : public Error
{
public:
    ForwardReference( std::size_t line, std::size_t cited, SourceSpan span );

    [[nodiscard]] std::size_t line() const { return _line; }
    [[nodiscard]] std::size_t cited() const { return _cited; }
    [[nodiscard]] const SourceSpan& span() const { return _span; }

private:
    std::size_t _line;
    std::size_t _cited;
    SourceSpan _span;
};

// Structural problems in programmatically built models and posets
// (duplicate names, bad identifiers, out-of-range members).
class ModelError : public Error
{
public:
    using Error::Error;
};

class IllegalTagForProfile : public Error
{
public:
    using Error::Error;
};

class FrameViolation : public Error
{
public:
    FrameViolation( const std::string& message, std::size_t count );

    [[nodiscard]] std::size_t violation_count() const { return _count; }

private:
    std::size_t _count;
};

class BoundsTooLarge : public Error
{
public:
    BoundsTooLarge( long double estimate, long double ceiling );

    [[nodiscard]] long double estimate() const { return _estimate; }

private:
    long double _estimate;
};

} // namespace sal
