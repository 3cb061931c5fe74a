#include <random>

#include "doctest.h"
#include "fltk/arith.hpp"
#include "oracles.hpp"

using namespace fltk;

TEST_CASE("mod_pow examples") {
    CHECK(mod_pow(2, 0, 7) == 1);
    // naive loop: 8^8 mod 41 = 16
    CHECK(oracle::naive_pow_mod(8, 8, 41) == 16);
    CHECK(mod_pow(8, 8, 41) == 16);
    CHECK(mod_pow(5, 40, 41) == 1);
    CHECK(mod_pow(-3, 3, 7) == 1);  // -27 = 1 mod 7
    CHECK_THROWS_AS(mod_pow(3, 2, 1), DomainError);
    CHECK_THROWS_AS(mod_pow(3, 2, -5), DomainError);
}

TEST_CASE("mod_pow agrees with the naive product") {
    for (std::int64_t m = 2; m < 50; ++m) {
        for (std::int64_t a = 0; a < 50; ++a) {
            for (std::uint64_t e = 0; e < 50; ++e) {
                REQUIRE(mod_pow(a, e, m) == oracle::naive_pow_mod(static_cast<std::uint64_t>(a), e,
                                                                  static_cast<std::uint64_t>(m)));
            }
        }
    }
}

TEST_CASE("is_prime examples and edge values") {
    CHECK_FALSE(is_prime(std::uint64_t{0}));
    CHECK_FALSE(is_prime(std::uint64_t{1}));
    CHECK(is_prime(std::uint64_t{2}));
    CHECK(is_prime(std::uint64_t{41}));
    CHECK_FALSE(is_prime(std::uint64_t{21}));
    // composites that pass Miller-Rabin for shorter base lists
    CHECK_FALSE(is_prime(std::uint64_t{3215031751}));
    CHECK_FALSE(is_prime(std::uint64_t{3825123056546413051ULL}));
    CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));  // largest 64-bit prime
    CHECK_FALSE(is_prime(std::uint64_t{18446744073709551615ULL}));
}

TEST_CASE("is_prime on big integers rejects what it cannot decide") {
    CHECK(is_prime(BigInt(41)));
    CHECK_FALSE(is_prime(BigInt(1)));
    CHECK_THROWS_AS(is_prime(BigInt(-7)), PreconditionError);
    BigInt big;
    mpz_ui_pow_ui(big.get_mpz_t(), 2, 64);
    CHECK_THROWS_AS(is_prime(big + 13), RangeError);
    CHECK_FALSE(is_prime(BigInt(big - 1)));
}

TEST_CASE("is_prime agrees with trial division below 10^6") {
    const auto sieve = oracle::sieve(1'000'000);
    for (std::uint64_t m = 0; m < 1'000'000; ++m) {
        REQUIRE(is_prime(m) == sieve[m]);
    }
    for (std::uint64_t m : {1'000'003ULL, 999'999'999'989ULL, 1'000'003ULL * 1'000'033ULL}) {
        CHECK(is_prime(m) == oracle::trial_division_prime(m));
    }
}

TEST_CASE("kronecker examples") {
    CHECK(kronecker(-4, 5) == 1);
    CHECK(kronecker(-4, 2) == 0);
    CHECK(kronecker(-4, 11) == -1);
    CHECK(kronecker(-3, 2) == -1);  // -3 = 5 mod 8
    CHECK(kronecker(-7, 2) == 1);   // -7 = 1 mod 8
    CHECK(kronecker(5, 0) == 0);
    CHECK(kronecker(-1, 0) == 1);
    CHECK(kronecker(-1, -1) == -1);
    CHECK(kronecker(3, -1) == 1);
    CHECK(kronecker(-8, 15) == kronecker(-8, 3) * kronecker(-8, 5));
}

TEST_CASE("kronecker matches quadratic-residue enumeration for odd primes below 1000") {
    for (std::int64_t p = 3; p < 1000; p += 2) {
        if (!oracle::trial_division_prime(static_cast<std::uint64_t>(p))) {
            continue;
        }
        for (std::int64_t a = -60; a <= 60; ++a) {
            REQUIRE(kronecker(a, p) == oracle::legendre_by_squares(a, p));
        }
        REQUIRE(kronecker(p * 7 + 3, p) == oracle::legendre_by_squares(3, p));
    }
}

TEST_CASE("kronecker is multiplicative in the bottom argument") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> top(-500, 500), bottom(-300, 300);
    for (int i = 0; i < 5000; ++i) {
        const std::int64_t a = top(rng), m = bottom(rng), n = bottom(rng);
        REQUIRE(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
    }
}

TEST_CASE("gcd") {
    CHECK(gcd(BigInt(0), BigInt(0)) == 0);
    CHECK(gcd(BigInt(12), BigInt(18)) == 6);
    CHECK(gcd(BigInt(-12), BigInt(18)) == 6);
    CHECK(gcd(BigInt(16777215), BigInt(41)) == 1);  // 8^8 - 1
    CHECK(gcd(std::uint64_t{0}, std::uint64_t{0}) == 0);
    CHECK(gcd(std::uint64_t{12}, std::uint64_t{18}) == 6);
}

TEST_CASE("ExactRational normalizes eagerly") {
    const ExactRational a(BigInt(6), BigInt(-4));
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(ExactRational(BigInt(0), BigInt(-9)).den() == 1);
    CHECK(ExactRational(BigInt(-691), BigInt(2730)).to_string() == "-691/2730");
    CHECK(ExactRational(BigInt(10), BigInt(5)).to_string() == "2");
    CHECK_THROWS_AS(ExactRational(BigInt(1), BigInt(0)), DomainError);
    CHECK_THROWS_AS(ExactRational(1) / ExactRational(0), DomainError);
}

TEST_CASE("ExactRational: (x + y) - y == x on random operands") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    for (int i = 0; i < 2000; ++i) {
        const ExactRational x(BigInt(num(rng)), BigInt(den(rng)));
        const ExactRational y(BigInt(num(rng)), BigInt(den(rng)));
        const ExactRational back = (x + y) - y;
        REQUIRE(back == x);
        REQUIRE(gcd(back.num(), back.den()) <= 1);
        REQUIRE(back.den() >= 1);
        if (!y.is_zero()) {
            REQUIRE((x * y) / y == x);
        }
    }
}

TEST_CASE("reduce_mod") {
    CHECK(reduce_mod(ExactRational(BigInt(1), BigInt(6)), 5) == std::optional<std::uint64_t>(1));
    CHECK(reduce_mod(ExactRational(BigInt(-1), BigInt(30)), 7) == std::optional<std::uint64_t>(3));
    CHECK_FALSE(reduce_mod(ExactRational(BigInt(1), BigInt(10)), 5).has_value());
}

TEST_CASE("inv_mod and squarefree") {
    CHECK(mul_mod(inv_mod(2, 5), 2, 5) == 1);
    CHECK_THROWS_AS(inv_mod(6, 9), DomainError);
    CHECK(is_squarefree(-1));
    CHECK(is_squarefree(-30));
    CHECK_FALSE(is_squarefree(-4));
    CHECK_FALSE(is_squarefree(-18));
    CHECK_FALSE(is_squarefree(0));
}
