#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "starprod/grid.hpp"

namespace starprod::testing {

inline std::vector<Vertex> vs(std::initializer_list<const char*> names) {
    std::vector<Vertex> out;
    for (const char* s : names) out.push_back(parse_vertex(s));
    return out;
}

inline std::vector<std::string> names(const std::vector<Vertex>& vertices) {
    std::vector<std::string> out;
    for (const auto& v : vertices) out.push_back(to_string(v));
    return out;
}

}  // namespace starprod::testing
