#pragma once

#include <cstdint>
#include <limits>

#include "polyangle/geometry.hpp"
#include "polyangle/polygonize.hpp"

namespace polyangle {

// Exhaustive ground truth over all simple polygonizations of a small set.
// Cyclic orders are enumerated in canonical form: smallest index first,
// second index smaller than the last, which folds rotations and reflections.
struct PolygonizationEnumeration {
    std::uint64_t count = 0;    // distinct simple polygonizations
    std::uint64_t explored = 0; // search-tree nodes expanded (what `cap` bounds)
    bool complete = true;       // false when the node cap stopped the search
    double theta = 0.0;         // min over polygons of the max interior angle
    Polygon best;               // lexicographically smallest argmin, canonical orientation
};

inline constexpr std::uint64_t kNoCap = std::numeric_limits<std::uint64_t>::max();

// Depth-first search with crossing-table pruning. `cap` bounds search-tree
// node expansions; hitting it marks the result partial (complete == false),
// which certification refuses to use. Throws TooLarge above 10 points.
PolygonizationEnumeration enumerate_polygonizations(const PointSet& s, std::uint64_t cap = kNoCap);

struct CertificationReport {
    int n = 0;
    int m = 0;
    int r = 0;
    int d = 0;
    std::uint64_t count = 0;
    double theta = 0.0;
    double rm_bound = 0.0;
    double dm_bound = 0.0;
    double edgewise_max = 0.0;
    double onion_max = 0.0;
};

// Checks theta against both bounds and sandwiches the constructive outputs
// between theta and their bounds. Throws CertificationFailure with the full
// instance embedded in the message on any violation.
CertificationReport certify_bounds(const PointSet& s);

} // namespace polyangle
