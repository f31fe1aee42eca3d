#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mpath {

enum class ErrorKind {
    SelfLoop,
    DuplicateEdge,
    VertexOutOfRange,
    BadParameters,
    NotRegularMorphism,
    SizeLimitExceeded,
    MissingCover,
    NotAComplex,
    InvalidAlgebra,
    UngradedAlgebra,
    ConfigurationMismatch,
    NotDecomposable,
    NotUnivalent,
    NotLinear,
    ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), index_(index) {}

    ErrorKind kind() const { return kind_; }
    std::optional<std::size_t> index() const { return index_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> index_;
};

}  // namespace mpath
