#pragma once

#include <stdexcept>
#include <string>

namespace polyangle {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input rejected while building a PointSet (file or generator).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct DuplicatePoint : Error {
    explicit DuplicatePoint(const std::string& msg) : Error(msg) {}
};

// Fewer than 3 points, or all points collinear.
struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& msg) : Error(msg) {}
};

// Angle query where the apex coincides with a chord endpoint.
struct CoincidentPoint : Error {
    explicit CoincidentPoint(const std::string& msg) : Error(msg) {}
};

// Arc measure requested for a point the sweep arc can never meet.
struct WrongSide : Error {
    explicit WrongSide(const std::string& msg) : Error(msg) {}
};

struct NotInterior : Error {
    explicit NotInterior(const std::string& msg) : Error(msg) {}
};

// Sweep insertion found no visible edge. This never happens for valid
// input; it signals a geometry bug and carries diagnostics.
struct NoVisibleEdge : Error {
    explicit NoVisibleEdge(const std::string& msg) : Error(msg) {}
};

// An inner point was claimed by no hull edge's sweep.
struct UnclaimedPoint : Error {
    explicit UnclaimedPoint(const std::string& msg) : Error(msg) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

// A brute-force certification found a bound violation. Carries the
// offending instance so it can be reproduced.
struct CertificationFailure : Error {
    explicit CertificationFailure(const std::string& msg) : Error(msg) {}
};

} // namespace polyangle
