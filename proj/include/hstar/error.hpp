#pragma once

#include <stdexcept>

namespace hstar {

struct NotSublattice : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PointNotInLattice : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotFullDimensional : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RedundantVertex : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSimplex : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Degenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConstructionSelfCheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ClassificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NegativeCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hstar
