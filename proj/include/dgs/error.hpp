#pragma once

#include <stdexcept>
#include <string>

namespace dgs {

/// Malformed or unrepresentable graph / matrix input. CLI exit code 1.
class FormatError : public std::runtime_error {
public:
    enum class Kind {
        malformed_header,
        vertex_out_of_range,
        self_loop,
        duplicate_edge,
        truncated,
        trailing_data,
        bad_character,
        size_limit,
        bad_token,
        io,
    };

    FormatError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// A caller passed input violating an operation's precondition (non-square
/// matrix, odd-degree vertex where even degrees are required, size guard...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical hypothesis of a theorem-driven operation is not met
/// (singular walk matrix, graphs not generalized cospectral...). CLI exit code 2.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed. Always a bug. CLI exit code 3.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace dgs
