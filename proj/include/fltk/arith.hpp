#pragma once

// Integer, modular and exact-rational primitives shared by the rest of the
// library. Arbitrary-precision values are GMP (gmpxx) objects.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fltk {

using BigInt = mpz_class;

class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class RangeError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Reduced fraction num/den with den >= 1; zero is 0/1.
class ExactRational {
  public:
    ExactRational() = default;
    ExactRational(long value);  // NOLINT(google-explicit-constructor)
    explicit ExactRational(BigInt num, BigInt den = 1);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
    ExactRational operator-() const;

    ExactRational& operator+=(const ExactRational& o) { return *this = *this + o; }
    ExactRational& operator-=(const ExactRational& o) { return *this = *this - o; }
    ExactRational& operator*=(const ExactRational& o) { return *this = *this * o; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// "num" when den == 1, "num/den" otherwise.
    std::string to_string() const;

  private:
    BigInt num_ = 0;
    BigInt den_ = 1;
};

/// Residue of r in F_m, or nothing if m divides the denominator.
std::optional<std::uint64_t> reduce_mod(const ExactRational& r, std::uint64_t m);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// base^exp mod m in O(log exp) multiplications. Throws DomainError if m < 2.
std::uint64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t m);

/// Unsigned variant for moduli up to 2^64 - 1; m must be >= 1.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t m);

/// Same test on an arbitrary-precision value. Negative input is a
/// PreconditionError; values >= 2^64 are a RangeError ("range unsupported").
bool is_prime(const BigInt& m);

/// Full Kronecker symbol (a|n), including negative and even arguments.
int kronecker(std::int64_t a, std::int64_t n);

BigInt gcd(const BigInt& a, const BigInt& b);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

bool is_squarefree(std::int64_t d);

}  // namespace fltk
