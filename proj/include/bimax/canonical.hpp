#ifndef BIMAX_CANONICAL_HPP
#define BIMAX_CANONICAL_HPP

#include <compare>
#include <string>

#include "bimax/graph.hpp"

namespace bimax {

// Exact canonicalization is only supported for small graphs.
inline constexpr int kMaxCanonicalVertices = 12;

// Opaque encoding of a bipartite graph that is identical for two graphs iff
// they are isomorphic as abstract graphs. Invariant under relabeling within
// either side, under exchanging the sides, and under re-rooting components
// on different sides (isolated vertices and disconnected components may sit
// in X or Y without affecting the form).
struct CanonicalForm {
    std::string key;

    auto operator<=>(const CanonicalForm&) const = default;
    const std::string& str() const { return key; }
};

// Exact canonical form, component by component: each connected component of
// a bipartite graph has a bipartition that is unique up to swap, so the
// component's form is the minimum matrix encoding over all within-side
// permutations (and both orientations when the sides have equal size); the
// graph's form is the sorted multiset of component forms. Throws
// std::domain_error when n exceeds kMaxCanonicalVertices.
CanonicalForm canonical_form(const BipartiteGraph& g);

}  // namespace bimax

#endif
