#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sal {

using Pair = std::pair< std::size_t, std::size_t >;

// Binary relation over the positions [0, n), stored as a dense matrix.
class Relation
{
public:
    Relation() = default;
    explicit Relation( std::size_t n ) : _n( n ), _bits( n * n, 0 ) {}

    [[nodiscard]] std::size_t size() const { return _n; }
    [[nodiscard]] bool contains( std::size_t from, std::size_t to ) const { return _bits[ from * _n + to ] != 0; }
    void insert( std::size_t from, std::size_t to ) { _bits[ from * _n + to ] = 1; }
    void erase( std::size_t from, std::size_t to ) { _bits[ from * _n + to ] = 0; }

    // Row-major, so pairs come out sorted.
    [[nodiscard]] std::vector< Pair > pairs() const;
    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] bool empty() const { return count() == 0; }
    [[nodiscard]] std::vector< std::size_t > successors( std::size_t from ) const;

    [[nodiscard]] bool is_subset_of( const Relation& other ) const;
    [[nodiscard]] bool is_reflexive() const;
    [[nodiscard]] bool is_transitive() const;
    [[nodiscard]] bool is_antisymmetric() const;
    [[nodiscard]] bool is_partial_order() const { return is_reflexive() && is_transitive() && is_antisymmetric(); }

    friend bool operator==( const Relation&, const Relation& ) = default;

private:
    std::size_t _n = 0;
    std::vector< unsigned char > _bits;
};

[[nodiscard]] Relation reflexive_transitive_closure( const Relation& r );

// Reflexive-transitive closure of the generators over n = names.size()
// elements. Throws CycleError (with the offending names) if the closure is
// not antisymmetric.
[[nodiscard]] Relation poset_closure( std::span< const Pair > generators, std::span< const std::string > names );

// Covering pairs (Hasse diagram) of a partial order, sorted.
[[nodiscard]] std::vector< Pair > covering_pairs( const Relation& order );

} // namespace sal
