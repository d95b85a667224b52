#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ncx {

enum class ErrorKind {
    DimensionMismatch,
    NPowerNonzero,
    InvalidAmplitude,
    FieldMismatch,
    ModulusMismatch,
    CommutationFailure,
    CompositionMismatch,
    NotExact,
    LiftFailure,
    NotCommutative,
    InvalidParameters,
    PreconditionFailed,
    ParseError,
    Internal,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind and, where meaningful, the
/// degree (and amplitude) at which the problem was found.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, int degree = 0, int amplitude = 0)
        : std::runtime_error(std::move(message)), kind_(kind), degree_(degree), amplitude_(amplitude) {}

    ErrorKind kind() const { return kind_; }
    int degree() const { return degree_; }
    int amplitude() const { return amplitude_; }

private:
    ErrorKind kind_;
    int degree_;
    int amplitude_;
};

/// The coefficient field: the rationals or a prime field F_p (p < 2^31).
///
/// Scalars are stored as mpq_class in both cases; over F_p they are kept as
/// integers in [0, p) by reduce().
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    mpq_class reduce(const mpq_class& value) const;
    mpq_class from_int(long value) const { return reduce(mpq_class(value)); }
    mpq_class inverse(const mpq_class& value) const;

    /// "a/b" (or "a") for Q; decimal residue for F_p.
    std::string format(const mpq_class& value) const;
    /// Strict inverse of format(): non-normalized input is rejected.
    mpq_class parse(std::string_view text) const;

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace ncx
