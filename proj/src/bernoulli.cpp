#include "fltk/bernoulli.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <string>

namespace fltk {

QuadraticCharacter::QuadraticCharacter(std::int64_t disc) : disc_(disc) {
    if (disc == 0 || (((disc % 4) + 4) % 4 != 0 && ((disc % 4) + 4) % 4 != 1)) {
        throw DomainError("QuadraticCharacter: discriminant must be nonzero and 0 or 1 mod 4");
    }
    const std::uint64_t f = disc < 0 ? static_cast<std::uint64_t>(-disc) : static_cast<std::uint64_t>(disc);
    values_.resize(f);
    for (std::uint64_t a = 0; a < f; ++a) {
        values_[a] = kronecker(disc, static_cast<std::int64_t>(a));
    }
}

int QuadraticCharacter::operator()(std::int64_t a) const {
    const auto f = static_cast<std::int64_t>(values_.size());
    std::int64_t r = a % f;
    if (r < 0) {
        r += f;
    }
    return values_[static_cast<std::size_t>(r)];
}

namespace {

// Guarded memo of exact Bernoulli numbers; entries are never modified once
// appended, and callers receive copies.
class BernoulliMemo {
  public:
    ExactRational get(unsigned k) {
        std::lock_guard lock(mutex_);
        while (values_.size() <= k) {
            values_.push_back(next(static_cast<unsigned>(values_.size())));
        }
        return values_[k];
    }

  private:
    ExactRational next(unsigned m) const {
        if (m == 0) {
            return 1;
        }
        if (m >= 3 && m % 2 == 1) {
            return 0;
        }
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        ExactRational sum;
        BigInt binom = 1;  // C(m+1, j)
        for (unsigned j = 0; j < m; ++j) {
            if (!values_[j].is_zero()) {
                sum += ExactRational(binom) * values_[j];
            }
            binom = binom * (m + 1 - j) / (j + 1);
        }
        return -sum / ExactRational(BigInt(m + 1));
    }

    std::mutex mutex_;
    std::vector<ExactRational> values_;
};

BernoulliMemo& memo() {
    static BernoulliMemo instance;
    return instance;
}

ExactRational power(const ExactRational& x, unsigned e) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), x.num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.den().get_mpz_t(), e);
    return ExactRational(num, den);
}

// B_k(x) = sum_j C(k, j) B_j x^(k-j), no range restriction on x.
ExactRational bernoulli_poly(unsigned k, const ExactRational& x) {
    ExactRational sum;
    BigInt binom = 1;
    for (unsigned j = 0; j <= k; ++j) {
        const ExactRational bj = bernoulli_exact(j);
        if (!bj.is_zero()) {
            sum += ExactRational(binom) * bj * power(x, k - j);
        }
        binom = binom * (k - j) / (j + 1);
    }
    return sum;
}

std::optional<std::uint64_t> try_inv(std::uint64_t a, std::uint64_t p) {
    if (gcd(a % p, p) != 1) {
        return std::nullopt;
    }
    return inv_mod(a, p);
}

void check_scan_prime(std::uint64_t p) {
    if (p < 5 || p > kMaxScanPrime || !is_prime(p)) {
        throw PreconditionError("mod-p Bernoulli: p must be a prime in [5, " + std::to_string(kMaxScanPrime) + "]");
    }
}

// Unreduced products of two residues below p can be summed this many times
// in 64 bits before a reduction is needed.
std::size_t lazy_chunk(std::uint64_t p) {
    const std::uint64_t sq = (p - 1) * (p - 1);
    return static_cast<std::size_t>(std::min<std::uint64_t>(std::numeric_limits<std::uint64_t>::max() / sq, 1U << 20));
}

// sum_{j=lo}^{hi} a[j] * b[k - j] mod p
std::uint64_t convolve_at(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b, std::size_t k,
                          std::size_t lo, std::size_t hi, std::uint64_t p, std::size_t chunk) {
    std::uint64_t total = 0;
    for (std::size_t start = lo; start <= hi; start += chunk) {
        const std::size_t stop = std::min(hi, start + chunk - 1);
        std::uint64_t acc = 0;
        for (std::size_t j = start; j <= stop; ++j) {
            acc += static_cast<std::uint64_t>(a[j]) * b[k - j];
        }
        total = (total + acc % p) % p;
    }
    return total;
}

}  // namespace

ExactRational bernoulli_exact(unsigned k) {
    if (k > kMaxBernoulliIndex) {
        throw RangeError("bernoulli_exact: k above " + std::to_string(kMaxBernoulliIndex));
    }
    return memo().get(k);
}

ExactRational bernoulli_poly_at(unsigned k, std::int64_t a, std::int64_t f) {
    if (f < 1 || a < 0 || a >= f) {
        throw DomainError("bernoulli_poly_at: need 0 <= a < f");
    }
    return bernoulli_poly(k, ExactRational(BigInt(static_cast<long>(a)), BigInt(static_cast<long>(f))));
}

ExactRational gen_bernoulli_exact(unsigned k, const QuadraticCharacter& chi) {
    if (k == 0) {
        throw DomainError("gen_bernoulli_exact: k must be >= 1");
    }
    const std::uint64_t f = chi.conductor();
    const BigInt big_f(static_cast<unsigned long>(f));
    ExactRational sum;
    for (std::uint64_t a = 1; a <= f; ++a) {
        const int c = chi(static_cast<std::int64_t>(a));
        if (c == 0) {
            continue;
        }
        const ExactRational term = bernoulli_poly(k, ExactRational(BigInt(static_cast<unsigned long>(a)), big_f));
        sum += c > 0 ? term : -term;
    }
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), big_f.get_mpz_t(), k - 1);
    return ExactRational(scale) * sum;
}

BernoulliModTable bernoulli_all_mod_p(std::uint64_t p) {
    check_scan_prime(p);
    const std::size_t n = p - 1;  // indices 0 .. p-2

    // factorials up to (p-1)! and their inverses
    std::vector<std::uint64_t> fact(p), inv_fact(p);
    fact[0] = 1;
    for (std::size_t i = 1; i < p; ++i) {
        fact[i] = mul_mod(fact[i - 1], i, p);
    }
    inv_fact[p - 1] = inv_mod(fact[p - 1], p);
    for (std::size_t i = p - 1; i > 0; --i) {
        inv_fact[i - 1] = mul_mod(inv_fact[i], i, p);
    }

    // (e^t - 1)/t = sum t^j / (j+1)!
    std::vector<std::uint32_t> series(n), inverse(n);
    for (std::size_t j = 0; j < n; ++j) {
        series[j] = static_cast<std::uint32_t>(inv_fact[j + 1]);
    }
    const std::size_t chunk = lazy_chunk(p);
    inverse[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        const std::uint64_t s = convolve_at(series, inverse, k, 1, k, p, chunk);
        inverse[k] = static_cast<std::uint32_t>(s == 0 ? 0 : p - s);
    }

    BernoulliModTable table{p, std::vector<std::uint64_t>(n)};
    for (std::size_t k = 0; k < n; ++k) {
        table.values[k] = mul_mod(fact[k], inverse[k], p);
    }
    return table;
}

std::optional<std::uint64_t> gen_bernoulli_mod_p(unsigned k, const QuadraticCharacter& chi, std::uint64_t p,
                                                 const BernoulliModTable& table) {
    const std::uint64_t f = chi.conductor();
    if (table.p != p) {
        throw PreconditionError("gen_bernoulli_mod_p: table computed for a different prime");
    }
    if (f % p == 0) {
        throw PreconditionError("gen_bernoulli_mod_p: p divides the conductor");
    }
    if (k == 0 || k + 2 > p) {
        throw PreconditionError("gen_bernoulli_mod_p: need 1 <= k <= p - 2");
    }
    const auto inv_f = try_inv(f, p);
    if (!inv_f) {
        return std::nullopt;
    }

    // binomials C(k, j) mod p along the row
    std::vector<std::uint64_t> binom(k + 1);
    binom[0] = 1;
    for (unsigned j = 1; j <= k; ++j) {
        const auto inv_j = try_inv(j, p);
        if (!inv_j) {
            return std::nullopt;
        }
        binom[j] = mul_mod(mul_mod(binom[j - 1], k - j + 1, p), *inv_j, p);
    }

    std::uint64_t sum = 0;
    for (std::uint64_t a = 1; a <= f; ++a) {
        const int c = chi(static_cast<std::int64_t>(a));
        if (c == 0) {
            continue;
        }
        // B_k(a/f) = sum_j C(k, j) B_j x^(k-j), x = a/f
        const std::uint64_t x = mul_mod(a % p, *inv_f, p);
        std::uint64_t value = 0;
        std::uint64_t x_pow = 1;
        for (unsigned e = 0; e <= k; ++e) {
            const unsigned j = k - e;
            value = (value + mul_mod(mul_mod(binom[j], table.values[j], p), x_pow, p)) % p;
            x_pow = mul_mod(x_pow, x, p);
        }
        sum = c > 0 ? (sum + value) % p : (sum + p - value) % p;
    }
    return mul_mod(pow_mod(f, k - 1, p), sum, p);
}

std::vector<std::optional<std::uint64_t>> gen_bernoulli_all_mod_p(const QuadraticCharacter& chi,
                                                                  const BernoulliModTable& table) {
    const std::uint64_t p = table.p;
    const std::uint64_t f = chi.conductor();
    check_scan_prime(p);
    if (f % p == 0) {
        throw PreconditionError("gen_bernoulli_all_mod_p: p divides the conductor");
    }
    const std::size_t n = p - 1;
    std::vector<std::optional<std::uint64_t>> out(n);
    const auto inv_f = try_inv(f, p);
    if (!inv_f) {
        return out;
    }

    std::vector<std::uint64_t> fact(n), inv_fact(n);
    fact[0] = 1;
    for (std::size_t i = 1; i < n; ++i) {
        fact[i] = mul_mod(fact[i - 1], i, p);
    }
    inv_fact[n - 1] = inv_mod(fact[n - 1], p);
    for (std::size_t i = n - 1; i > 0; --i) {
        inv_fact[i - 1] = mul_mod(inv_fact[i], i, p);
    }

    // B_{k,chi} / k! = sum_j [B_j f^(j-1) / j!] * [S_(k-j) / (k-j)!],
    // S_m = sum_{a=1}^{f} chi(a) a^m
    std::vector<std::uint64_t> power_sums(n, 0);
    for (std::uint64_t a = 1; a <= f; ++a) {
        const int c = chi(static_cast<std::int64_t>(a));
        if (c == 0) {
            continue;
        }
        const std::uint64_t base = a % p;
        std::uint64_t x = 1;
        for (std::size_t m = 0; m < n; ++m) {
            power_sums[m] = c > 0 ? (power_sums[m] + x) % p : (power_sums[m] + p - x) % p;
            x = mul_mod(x, base, p);
        }
    }

    std::vector<std::uint32_t> left(n), right(n);
    std::uint64_t f_pow = *inv_f;  // f^(j-1)
    for (std::size_t j = 0; j < n; ++j) {
        left[j] = static_cast<std::uint32_t>(mul_mod(mul_mod(table.values[j], f_pow, p), inv_fact[j], p));
        right[j] = static_cast<std::uint32_t>(mul_mod(power_sums[j], inv_fact[j], p));
        f_pow = mul_mod(f_pow, f % p, p);
    }
    const std::size_t chunk = lazy_chunk(p);
    for (std::size_t k = 1; k < n; ++k) {
        out[k] = mul_mod(fact[k], convolve_at(left, right, k, 0, k, p, chunk), p);
    }
    return out;
}

}  // namespace fltk
