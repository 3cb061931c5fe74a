#include "fltk/resultant.hpp"

#include <string>
#include <utility>

namespace fltk {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

IntPolynomial cyclic_poly(unsigned n) {
    std::vector<BigInt> c(n + 1, 0);
    c[0] = -1;
    c[n] += 1;
    return IntPolynomial(std::move(c));
}

IntPolynomial shifted_cyclic_poly(unsigned n) {
    std::vector<BigInt> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        mpz_bin_uiui(c[k].get_mpz_t(), n, k);
    }
    c[0] -= 1;
    return IntPolynomial(std::move(c));
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t size = m.size();
    if (size == 0) {
        return 1;
    }
    for (const auto& row : m) {
        if (row.size() != size) {
            throw PreconditionError("bareiss_determinant: matrix is not square");
        }
    }
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < size && m[pivot][k] == 0) {
                ++pivot;
            }
            if (pivot == size) {
                return 0;
            }
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                // exact by Sylvester's identity
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    BigInt det = m[size - 1][size - 1];
    return sign < 0 ? BigInt(-det) : det;
}

BigInt sylvester_resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) {
        throw PreconditionError("sylvester_resultant: zero polynomial");
    }
    const auto df = static_cast<std::size_t>(f.degree());
    const auto dg = static_cast<std::size_t>(g.degree());
    const std::size_t size = df + dg;
    if (size == 0) {
        return 1;
    }
    std::vector<std::vector<BigInt>> m(size, std::vector<BigInt>(size, 0));
    for (std::size_t i = 0; i < dg; ++i) {
        for (std::size_t j = 0; j <= df; ++j) {
            m[i][i + j] = f.coeffs()[df - j];
        }
    }
    for (std::size_t i = 0; i < df; ++i) {
        for (std::size_t j = 0; j <= dg; ++j) {
            m[dg + i][i + j] = g.coeffs()[dg - j];
        }
    }
    return bareiss_determinant(std::move(m));
}

namespace {

void check_exact_range(unsigned n) {
    if (n == 0 || n > kMaxExactN) {
        throw DomainError("W_n: n must lie in [1, " + std::to_string(kMaxExactN) + "]");
    }
}

}  // namespace

BigInt w_exact(unsigned n) {
    check_exact_range(n);
    return sylvester_resultant(cyclic_poly(n), shifted_cyclic_poly(n));
}

BigInt w_exact_root_product(unsigned n) {
    check_exact_range(n);
    // g mod (X^n - 1): fold exponent i onto i mod n
    const IntPolynomial shifted = shifted_cyclic_poly(n);
    const auto& g = shifted.coeffs();
    std::vector<BigInt> folded(n, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        folded[i % n] += g[i];
    }
    // column j holds X^j * g, i.e. the cyclic shift of folded by j
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            m[i][j] = folded[(i + n - j) % n];
        }
    }
    return bareiss_determinant(std::move(m));
}

std::uint64_t root_of_unity(std::uint64_t n, std::uint64_t q) {
    if (n == 0 || (q - 1) % n != 0) {
        throw PreconditionError("root_of_unity: n must divide q - 1");
    }
    if (n == 1) {
        return 1;
    }
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t rest = n;
    for (std::uint64_t r = 2; r * r <= rest; ++r) {
        if (rest % r == 0) {
            prime_factors.push_back(r);
            while (rest % r == 0) {
                rest /= r;
            }
        }
    }
    if (rest > 1) {
        prime_factors.push_back(rest);
    }
    const std::uint64_t cofactor = (q - 1) / n;
    for (std::uint64_t h = 2; h < q; ++h) {
        const std::uint64_t z = pow_mod(h, cofactor, q);
        bool exact_order = true;
        for (std::uint64_t r : prime_factors) {
            if (pow_mod(z, n / r, q) == 1) {
                exact_order = false;
                break;
            }
        }
        if (exact_order) {
            return z;
        }
    }
    throw PreconditionError("root_of_unity: no element of order n (q not prime?)");
}

bool w_divides(std::uint64_t n, std::uint64_t q) {
    if (!is_prime(q)) {
        throw PreconditionError("w_divides: q must be prime");
    }
    if (n == 0 || (q - 1) % n != 0) {
        throw PreconditionError("w_divides: n must divide q - 1");
    }
    const std::uint64_t zeta = root_of_unity(n, q);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t next = x + 1 == q ? 0 : x + 1;
        if (pow_mod(next, n, q) == 1) {
            return true;
        }
        x = mul_mod(x, zeta, q);
    }
    return false;
}

bool n_power_divides(std::uint64_t n, std::uint64_t q) {
    if (q < 2) {
        throw PreconditionError("n_power_divides: q must be prime");
    }
    return pow_mod(n, n, q) == 1;
}

}  // namespace fltk
