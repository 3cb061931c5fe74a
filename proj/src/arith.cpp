#include "fltk/arith.hpp"

#include <array>
#include <bit>
#include <limits>
#include <utility>

namespace fltk {

ExactRational::ExactRational(long value) : num_(value), den_(1) {}

ExactRational::ExactRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw DomainError("ExactRational: zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = fltk::gcd(num_, den_);
    if (g > 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
    if (num_ == 0) {
        den_ = 1;
    }
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    if (a.den_ == b.den_) {
        return ExactRational(a.num_ + b.num_, a.den_);
    }
    return ExactRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ExactRational operator-(const ExactRational& a, const ExactRational& b) { return a + (-b); }

ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return ExactRational(a.num_ * b.num_, a.den_ * b.den_);
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.is_zero()) {
        throw DomainError("ExactRational: division by zero");
    }
    return ExactRational(a.num_ * b.den_, a.den_ * b.num_);
}

ExactRational ExactRational::operator-() const {
    ExactRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

std::string ExactRational::to_string() const {
    if (den_ == 1) {
        return num_.get_str();
    }
    return num_.get_str() + "/" + den_.get_str();
}

std::optional<std::uint64_t> reduce_mod(const ExactRational& r, std::uint64_t m) {
    BigInt mm;
    mpz_import(mm.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), r.den().get_mpz_t(), mm.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    BigInt v = r.num() * inv;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
    std::uint64_t res = 0;
    mpz_export(&res, nullptr, 1, sizeof(res), 0, 0, v.get_mpz_t());
    return res;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t m) {
    if (m < 2) {
        throw DomainError("mod_pow: modulus must be >= 2");
    }
    const auto mod = static_cast<std::uint64_t>(m);
    std::int64_t b = base % m;
    if (b < 0) {
        b += m;
    }
    std::uint64_t x = static_cast<std::uint64_t>(b);
    std::uint64_t result = 1;
    while (exp > 0) {
        if (exp & 1U) {
            result = mul_mod(result, x, mod);
        }
        x = mul_mod(x, x, mod);
        exp >>= 1U;
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    // extended Euclid on signed 128-bit to cover the full 64-bit range
    __int128 old_r = static_cast<__int128>(a % m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        std::swap(old_r, r);
        r -= q * old_r;
        std::swap(old_s, s);
        s -= q * old_s;
    }
    if (old_r != 1) {
        throw DomainError("inv_mod: value not invertible");
    }
    if (old_s < 0) {
        old_s += m;
    }
    return static_cast<std::uint64_t>(old_s);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1U) {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1U;
    }
    return r;
}

namespace {

// The first twelve primes as bases decide primality for all n < 3.3e24.
constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t m) {
    if (m < 2) {
        return false;
    }
    for (std::uint64_t w : kWitnesses) {
        if (m % w == 0) {
            return m == w;
        }
    }
    const std::uint64_t m1 = m - 1;
    const int s = std::countr_zero(m1);
    const std::uint64_t d = m1 >> s;
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = pow_mod(a, d, m);
        if (x == 1 || x == m1) {
            continue;
        }
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, m);
            if (x == m1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

bool is_prime(const BigInt& m) {
    if (m < 0) {
        throw PreconditionError("is_prime: negative input");
    }
    if (mpz_sizeinbase(m.get_mpz_t(), 2) > 64) {
        throw RangeError("is_prime: range unsupported (input >= 2^64)");
    }
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, m.get_mpz_t());
    return is_prime(v);
}

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) {
        return (a == 1 || a == -1) ? 1 : 0;
    }
    if ((a % 2 == 0) && (n % 2 == 0)) {
        return 0;
    }
    // (a|2) by a mod 8
    constexpr std::array<int, 8> two{0, 1, 0, -1, 0, -1, 0, 1};
    int k = 1;
    unsigned __int128 un = n < 0 ? static_cast<unsigned __int128>(-(static_cast<__int128>(n)))
                                 : static_cast<unsigned __int128>(n);
    while ((un & 1U) == 0) {
        un >>= 1U;
        k *= two[static_cast<std::size_t>(((a % 8) + 8) % 8)];
    }
    if (n < 0 && a < 0) {
        k = -k;
    }
    // un is now odd and positive: the remaining factor is a Jacobi symbol
    auto nn = static_cast<std::uint64_t>(un);
    if (nn == 1) {
        return k;
    }
    std::int64_t r = a % static_cast<std::int64_t>(nn);
    if (r < 0) {
        r += static_cast<std::int64_t>(nn);
    }
    auto aa = static_cast<std::uint64_t>(r);
    while (aa != 0) {
        while ((aa & 1U) == 0) {
            aa >>= 1U;
            const std::uint64_t n8 = nn & 7U;
            if (n8 == 3 || n8 == 5) {
                k = -k;
            }
        }
        std::swap(aa, nn);
        if ((aa & 3U) == 3 && (nn & 3U) == 3) {
            k = -k;
        }
        aa %= nn;
    }
    return nn == 1 ? k : 0;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

bool is_squarefree(std::int64_t d) {
    if (d == 0) {
        return false;
    }
    std::uint64_t m = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
    for (std::uint64_t r = 2; r * r <= m; ++r) {
        if (m % r == 0) {
            m /= r;
            if (m % r == 0) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace fltk
