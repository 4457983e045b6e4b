#pragma once

#include <cstdint>
#include <string>

#include "polyangle/geometry.hpp"

namespace polyangle {

enum class Shape { RandomUniform, RegularPlusCenter, RegularPlusRandomInterior };

struct BoundingBox {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 1.0;
    double ymax = 1.0;
};

// A generated instance is a pure function of its spec: same spec, same bytes.
struct InstanceSpec {
    Shape shape = Shape::RandomUniform;
    int n = 0;
    std::uint64_t seed = 0;
    BoundingBox box;
    int hull_k = 0; // RegularPlusRandomInterior corner count; 0 picks max(3, n/2)
};

PointSet generate(const InstanceSpec& spec);

// CSV: one "x,y" pair per line, blank lines and #-comments skipped.
// JSON: an array of [x, y] pairs. Picked by file extension (.json), CSV
// otherwise. Diagnostics carry line numbers for CSV input.
PointSet read_points(const std::string& path);
PointSet parse_points_csv(const std::string& text);
PointSet parse_points_json(const std::string& text);

std::string to_csv(const PointSet& s);
std::string to_json_points(const PointSet& s);
void write_points(const PointSet& s, const std::string& path);

} // namespace polyangle
