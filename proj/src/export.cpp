#include "sal/export.hpp"

namespace sal {

std::string to_dot( const StratifiedModel& m, const std::optional< std::string >& highlight )
{
    auto node = [ & ]( std::size_t index, std::size_t world ) {
        return '"' + m.poset().name( index ) + '/' + m.world( world ) + '"';
    };
    std::string out = "digraph model {\n  rankdir=LR;\n";
    for ( std::size_t i = 0; i < m.poset().size(); ++i ) {
        const auto& name = m.poset().name( i );
        out += "  subgraph \"cluster_" + name + "\" {\n";
        out += "    label=\"" + name + ( m.poset().is_stable( i ) ? " (stable)" : "" ) + "\";\n";
        for ( std::size_t w = 0; w < m.world_count(); ++w ) {
            const bool marked = highlight && m.holds( *highlight, w );
            out += "    " + node( i, w ) + " [label=\"" + m.world( w ) + "\", shape="
                 + ( marked ? "doublecircle" : "circle" ) + "];\n";
        }
        for ( const auto& [ u, v ] : m.relation( i ).pairs() )
            out += "    " + node( i, u ) + " -> " + node( i, v ) + ";\n";
        out += "  }\n";
    }
    out += "}\n";
    return out;
}

} // namespace sal
