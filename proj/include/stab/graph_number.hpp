#pragma once

#include <stdexcept>
#include <string>

namespace stab {

// Selector over the four graph numbers driving all stability predicates:
// alpha (independence number), beta (vertex cover number), chi (chromatic
// number), omega (clique number).
enum class GraphNumber { Alpha, Beta, Chi, Omega };

inline const char* to_string(GraphNumber xi)
{
    switch (xi) {
    case GraphNumber::Alpha:
        return "alpha";
    case GraphNumber::Beta:
        return "beta";
    case GraphNumber::Chi:
        return "chi";
    default:
        return "omega";
    }
}

inline GraphNumber parse_graph_number(const std::string& s)
{
    if (s == "alpha")
        return GraphNumber::Alpha;
    if (s == "beta")
        return GraphNumber::Beta;
    if (s == "chi")
        return GraphNumber::Chi;
    if (s == "omega")
        return GraphNumber::Omega;
    throw std::domain_error("unknown graph number: " + s);
}

constexpr GraphNumber all_graph_numbers[] = {GraphNumber::Alpha,
    GraphNumber::Beta, GraphNumber::Chi, GraphNumber::Omega};

} // namespace stab
