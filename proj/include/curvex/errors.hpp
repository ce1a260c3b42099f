#pragma once

#include <stdexcept>
#include <string>

namespace curvex {

// Domain errors. Each maps to a named failure mode of one operation; the CLI
// prints the class name and exits 1.

struct Disconnected : std::runtime_error {
    explicit Disconnected(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParameter : std::invalid_argument {
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

struct VertexOutOfRange : std::out_of_range {
    explicit VertexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotSymmetric : std::invalid_argument {
    explicit NotSymmetric(const std::string& what) : std::invalid_argument(what) {}
};

struct MalformedGraph6 : std::runtime_error {
    MalformedGraph6(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    std::size_t offset;
};

struct MapInvalid : std::invalid_argument {
    explicit MapInvalid(const std::string& what) : std::invalid_argument(what) {}
};

struct CertificateViolation : std::logic_error {
    explicit CertificateViolation(const std::string& what) : std::logic_error(what) {}
};

struct DistanceExceptional : std::domain_error {
    explicit DistanceExceptional(const std::string& what) : std::domain_error(what) {}
};

struct NonPositive : std::invalid_argument {
    explicit NonPositive(const std::string& what) : std::invalid_argument(what) {}
};

struct PlacementLengthMismatch : std::invalid_argument {
    explicit PlacementLengthMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct OrderTooLarge : std::invalid_argument {
    explicit OrderTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct EigenFailure : std::runtime_error {
    explicit EigenFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace curvex
