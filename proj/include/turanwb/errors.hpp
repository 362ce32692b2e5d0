#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction / validation
struct WrongArity : Error { using Error::Error; };
struct VertexOutOfRange : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct ArityMismatch : Error { using Error::Error; };
struct ArityTooSmall : Error { using Error::Error; };
struct ParameterOrder : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };

// Lettering / audits
struct NotUniformMultiplicity : Error { using Error::Error; };

// Thrown when an audit is told the instance is pattern-free but a copy
// exists; carries the offending vertex map (pattern vertex i -> host vertex).
struct NotKHtFree : Error {
    NotKHtFree(const std::string& msg, std::vector<int> witness)
        : Error(msg), witness_map(std::move(witness)) {}
    std::vector<int> witness_map;
};

// Matrices
struct DimensionMismatch : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct UnsupportedOrder : Error { using Error::Error; };

// Bounds
struct DegenerateEx : Error { using Error::Error; };

// Persistence / IO
struct CorruptRecord : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace turan
