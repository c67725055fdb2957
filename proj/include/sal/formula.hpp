#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace sal {

enum class Connective
{
    atom,
    negation,
    conjunction,
    disjunction,
    implication,
    box,
    diamond,
};

// Immutable formula of the indexed modal language. Nodes are shared, so
// copies are cheap; equality and ordering are structural.
class Formula
{
public:
    [[nodiscard]] Connective kind() const { return _node->kind; }

    // Atom name for atoms, modal index for box/diamond, empty otherwise.
    [[nodiscard]] const std::string& label() const { return _node->label; }

    // Operand of unary connectives, left operand of binary ones.
    [[nodiscard]] const Formula& operand() const { return *_node->left; }
    [[nodiscard]] const Formula& left() const { return *_node->left; }
    [[nodiscard]] const Formula& right() const { return *_node->right; }

    [[nodiscard]] bool is_atom() const { return kind() == Connective::atom; }
    [[nodiscard]] bool is_modal() const { return kind() == Connective::box || kind() == Connective::diamond; }
    [[nodiscard]] bool is_binary() const;

    [[nodiscard]] std::size_t node_count() const { return _node->size; }
    [[nodiscard]] std::size_t depth() const { return _node->depth; }

    friend bool operator==( const Formula& a, const Formula& b );
    friend std::strong_ordering operator<=>( const Formula& a, const Formula& b );

    friend Formula atom( std::string name );
    friend Formula negation( Formula f );
    friend Formula conjunction( Formula f, Formula g );
    friend Formula disjunction( Formula f, Formula g );
    friend Formula implication( Formula f, Formula g );
    friend Formula box( std::string index, Formula f );
    friend Formula diamond( std::string index, Formula f );

private:
    struct Node
    {
        Connective kind;
        std::string label;
        std::unique_ptr< const Formula > left;
        std::unique_ptr< const Formula > right;
        std::size_t size;
        std::size_t depth;
    };

    explicit Formula( std::shared_ptr< const Node > node ) : _node( std::move( node ) ) {}
    static Formula make( Connective kind, std::string label, const Formula* left, const Formula* right );

    std::shared_ptr< const Node > _node;
};

// Throws ModelError if the name is not an identifier.
[[nodiscard]] Formula atom( std::string name );
[[nodiscard]] Formula negation( Formula f );
[[nodiscard]] Formula conjunction( Formula f, Formula g );
[[nodiscard]] Formula disjunction( Formula f, Formula g );
[[nodiscard]] Formula implication( Formula f, Formula g );
[[nodiscard]] Formula box( std::string index, Formula f );
[[nodiscard]] Formula diamond( std::string index, Formula f );

// All distinct subformulas, children before parents, f last.
[[nodiscard]] std::vector< Formula > subformulas( const Formula& f );

[[nodiscard]] std::set< std::string > atoms_of( const Formula& f );
[[nodiscard]] std::set< std::string > indices_of( const Formula& f );

} // namespace sal
