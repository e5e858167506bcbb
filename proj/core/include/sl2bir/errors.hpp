#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sl2bir {

// Caller passed structurally invalid input (mismatched variable counts,
// quadridegree of a P2 map, empty matrix list, ...).
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computation blew past its term-count budget.  `iterate` names the
// iterate reached when the budget ran out (0 when not iterating).
struct resource_error : std::runtime_error {
    int iterate;
    std::size_t terms;
    resource_error(const std::string& what, int iterate_, std::size_t terms_)
        : std::runtime_error(what), iterate(iterate_), terms(terms_) {}
};

// Composition collapsed to the zero tuple, or a map was evaluated at one
// of its base-points.
struct degenerate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sl2bir
