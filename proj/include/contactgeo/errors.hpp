#pragma once

#include <stdexcept>
#include <string>

namespace contactgeo {

/// Base class for all domain errors raised by the geometry modules.
class GeometryError : public std::runtime_error {
public:
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

/// Ambient complex dimension out of range (n >= 2 required, or n != 2 where 2 is needed).
class InvalidDimensionError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// Operation needs a real structure but the frame has none.
class NoRealStructureError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// Input vectors numerically dependent (smallest singular value below tolerance).
class DegenerateInputError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// Curvature formula applied to the wrong ambient kind.
class WrongAmbientError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// A vector required to be unit length is not.
class NormalizationError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// A stated operation precondition does not hold for the given data.
class PreconditionError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// Tube radius at or beyond the first focal distance.
class FocalRangeError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// Scalar parameter outside its admissible range.
class ParameterError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// Finite-difference stencil leaves the sampled grid.
class BoundaryError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// Chart frame numerically singular (condition number too large).
class ChartSingularityError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

} // namespace contactgeo
