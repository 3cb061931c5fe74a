#pragma once

// W_n = Res(X^n - 1, (X + 1)^n - 1) and the divisibility tests built on it.
//
// Convention: Res(f, g) = lc(f)^deg(g) * prod g(a) over the roots a of f,
// which is det of the Sylvester matrix with the rows of f placed first.

#include <cstdint>
#include <vector>

#include "fltk/arith.hpp"

namespace fltk {

/// Integer polynomial, ascending degree, no leading zeros (zero = empty).
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& leading() const { return coeffs_.back(); }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  private:
    std::vector<BigInt> coeffs_;
};

/// X^n - 1
IntPolynomial cyclic_poly(unsigned n);
/// (X + 1)^n - 1
IntPolynomial shifted_cyclic_poly(unsigned n);

/// Determinant of a square integer matrix by fraction-free Bareiss elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

/// Res(f, g) as the Sylvester determinant. Both inputs must be nonzero.
BigInt sylvester_resultant(const IntPolynomial& f, const IntPolynomial& g);

/// Largest n accepted by the exact routines.
inline constexpr unsigned kMaxExactN = 128;

/// Exact W_n through the Sylvester determinant. 1 <= n <= kMaxExactN.
BigInt w_exact(unsigned n);

/// Exact W_n as prod g(z) over the n-th roots of unity z, realised as the
/// determinant of multiplication by g on Z[X]/(X^n - 1) (a circulant).
BigInt w_exact_root_product(unsigned n);

/// q | W_n, decided in F_q by scanning the n-th roots of unity x for
/// (x + 1)^n = 1. Requires q prime and n | q - 1 (PreconditionError otherwise).
bool w_divides(std::uint64_t n, std::uint64_t q);

/// q | n^n - 1
bool n_power_divides(std::uint64_t n, std::uint64_t q);

/// An element of exact multiplicative order n in F_q (q prime, n | q - 1).
std::uint64_t root_of_unity(std::uint64_t n, std::uint64_t q);

}  // namespace fltk
