#pragma once

#include <stdexcept>
#include <string>

namespace nsd {

// Input text that could not be parsed (graph files, colouring JSON).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input outside an operation's domain (K_2 handed to an edge
// colouring, non-bipartite graph handed to a bipartite construction, ...).
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// A violated internal invariant. Always a bug, never a usage error.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace nsd
