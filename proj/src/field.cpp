#include "ncx/field.hpp"

#include <cctype>

namespace ncx {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NPowerNonzero: return "NPowerNonzero";
        case ErrorKind::InvalidAmplitude: return "InvalidAmplitude";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::ModulusMismatch: return "ModulusMismatch";
        case ErrorKind::CommutationFailure: return "CommutationFailure";
        case ErrorKind::CompositionMismatch: return "CompositionMismatch";
        case ErrorKind::NotExact: return "NotExact";
        case ErrorKind::LiftFailure: return "LiftFailure";
        case ErrorKind::NotCommutative: return "NotCommutative";
        case ErrorKind::InvalidParameters: return "InvalidParameters";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t k = 2; k * k <= n; ++k) {
        if (n % k == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
        throw Error(ErrorKind::InvalidParameters, "field characteristic must be a prime below 2^31, got " + std::to_string(p));
    }
    return Field(p);
}

mpq_class Field::reduce(const mpq_class& value) const {
    if (p_ == 0) return value;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = value.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = value.get_den() % p;
    if (den == 0) throw Error(ErrorKind::InvalidParameters, "denominator divisible by the characteristic");
    if (den != 1) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        num = (num * inv) % p;
    }
    return mpq_class(num);
}

mpq_class Field::inverse(const mpq_class& value) const {
    if (sgn(value) == 0) throw Error(ErrorKind::Internal, "inverse of zero");
    if (p_ == 0) return 1 / value;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class inv;
    mpz_class num = value.get_num();
    mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    return mpq_class(inv);
}

std::string Field::format(const mpq_class& value) const {
    if (p_ != 0) return value.get_num().get_str();
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

// Canonical decimal: "0" or a nonzero digit followed by digits.
bool canonical_unsigned(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return s.size() == 1 || s.front() != '0';
}

}  // namespace

mpq_class Field::parse(std::string_view text) const {
    auto fail = [&](const char* why) {
        return Error(ErrorKind::ParseError, "invalid scalar \"" + std::string(text) + "\" for " + name() + ": " + why);
    };
    if (p_ != 0) {
        if (!canonical_unsigned(text)) throw fail("expected a decimal residue");
        mpz_class v{std::string(text)};
        if (v >= mpz_class(static_cast<unsigned long>(p_))) throw fail("residue out of range");
        return mpq_class(v);
    }
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!canonical_unsigned(den)) throw fail("bad denominator");
    }
    bool negative = !num.empty() && num.front() == '-';
    std::string_view magnitude = negative ? num.substr(1) : num;
    if (!canonical_unsigned(magnitude)) throw fail("bad numerator");
    if (negative && magnitude == "0") throw fail("negative zero");
    mpz_class n{std::string(num)};
    if (den.empty()) return mpq_class(n);
    mpz_class d{std::string(den)};
    if (d <= 1) throw fail("denominator must exceed 1");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) throw fail("fraction not in lowest terms");
    mpq_class q(n, d);
    return q;
}

std::string Field::name() const {
    return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

}  // namespace ncx
