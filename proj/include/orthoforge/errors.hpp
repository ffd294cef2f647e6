#pragma once
#include <stdexcept>
#include <string>

namespace orthoforge {

// Base class for all errors raised by the library.
class ForgeError : public std::runtime_error {
public:
    explicit ForgeError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public ForgeError {
public:
    ParseError(const std::string& what, size_t line = 0)
        : ForgeError(line ? what + " (line " + std::to_string(line) + ")" : what), line(line) {}
    size_t line;
};

class IoError : public ForgeError {
public:
    using ForgeError::ForgeError;
};

class EmptyMesh : public ForgeError {
public:
    using ForgeError::ForgeError;
};

class DegenerateMesh : public ForgeError {
public:
    using ForgeError::ForgeError;
};

class DegenerateProjection : public ForgeError {
public:
    using ForgeError::ForgeError;
};

class UnsupportedSvgFeature : public ForgeError {
public:
    using ForgeError::ForgeError;
};

class DuplicateView : public ForgeError {
public:
    using ForgeError::ForgeError;
};

class DegenerateFit : public ForgeError {
public:
    using ForgeError::ForgeError;
};

// Loop assembly found an endpoint that no other segment closes within the
// snapping tolerance; gap_x/gap_y locate the open endpoint in model units.
class OpenLoop : public ForgeError {
public:
    OpenLoop(const std::string& what, double gx, double gy)
        : ForgeError(what), gap_x(gx), gap_y(gy) {}
    double gap_x, gap_y;
};

class NoLoops : public ForgeError {
public:
    using ForgeError::ForgeError;
};

class EmptyIntersection : public ForgeError {
public:
    using ForgeError::ForgeError;
};

class EmptyGrid : public ForgeError {
public:
    using ForgeError::ForgeError;
};

class GridMismatch : public ForgeError {
public:
    using ForgeError::ForgeError;
};

class EmptyDrawing : public ForgeError {
public:
    using ForgeError::ForgeError;
};

class EmptyInput : public ForgeError {
public:
    using ForgeError::ForgeError;
};

class MissingView : public ForgeError {
public:
    using ForgeError::ForgeError;
};

} // namespace orthoforge
