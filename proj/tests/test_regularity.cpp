#include "doctest.h"
#include "fltk/regularity.hpp"
#include "oracles.hpp"

using namespace fltk;

namespace {

// even k in [2, p-3] with p | numerator(B_k), from exact rationals
std::vector<unsigned> irregular_indices_exact(unsigned p) {
    const auto b = oracle::bernoulli_akiyama_tanigawa(p);
    std::vector<unsigned> out;
    for (unsigned k = 2; k + 3 <= p; k += 2) {
        if (mpz_divisible_ui_p(b[k].get_num().get_mpz_t(), p) != 0) {
            out.push_back(k);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("is_q_regular examples") {
    const auto r5 = is_q_regular(5);
    CHECK(r5.regular);
    CHECK(r5.failing_even_indices.empty());
    CHECK(is_q_regular(37).failing_even_indices == std::vector<unsigned>{32});
    CHECK(is_q_regular(59).failing_even_indices == std::vector<unsigned>{44});
    CHECK(is_q_regular(67).failing_even_indices == std::vector<unsigned>{58});
    CHECK_FALSE(is_q_regular(37).regular);
    CHECK_THROWS_AS(is_q_regular(3), DomainError);
    CHECK_THROWS_AS(is_q_regular(15), DomainError);
}

TEST_CASE("is_q_regular matches exact numerators below 200") {
    for (unsigned p = 5; p < 200; ++p) {
        if (!oracle::trial_division_prime(p)) {
            continue;
        }
        CAPTURE(p);
        const auto expected = irregular_indices_exact(p);
        const auto got = is_q_regular(p);
        REQUIRE(got.failing_even_indices == expected);
        REQUIRE(got.regular == expected.empty());
    }
}

TEST_CASE("is_k_regular examples over Q(i)") {
    const ImaginaryQuadraticField gauss(-1);
    CHECK(is_k_regular(5, gauss).is_regular);
    const auto r19 = is_k_regular(19, gauss);
    CHECK_FALSE(r19.is_regular);
    CHECK(r19.failing_even_indices.empty());
    CHECK(r19.failing_chi_indices == std::vector<unsigned>{11});
    const auto r37 = is_k_regular(37, gauss);
    CHECK_FALSE(r37.is_regular);
    CHECK(r37.failing_even_indices == std::vector<unsigned>{32});
    // 67 fails both parts; the diagnosis lists both
    const auto r67 = is_k_regular(67, gauss);
    CHECK(r67.failing_even_indices == std::vector<unsigned>{58});
    CHECK_FALSE(r67.failing_chi_indices.empty());
}

TEST_CASE("Q(i)-regular primes below 100") {
    const ImaginaryQuadraticField gauss(-1);
    std::vector<std::uint64_t> regular;
    for (std::uint64_t p = 5; p < 100; ++p) {
        if (is_prime(p) && is_k_regular(p, gauss).is_regular) {
            regular.push_back(p);
        }
    }
    CHECK(regular == std::vector<std::uint64_t>{5, 7, 11, 13, 17, 23, 29, 41, 53, 73, 83, 89, 97});
}

TEST_CASE("chi part over Q(i) is Euler irregularity, including the top index p - 2") {
    // p | B_{k+1,chi_-4}  <=>  p | E_k  for even k <= p - 3
    const ImaginaryQuadraticField gauss(-1);
    const auto euler = oracle::euler_numbers(260);
    for (std::uint64_t p : {19, 31, 43, 61, 101, 149, 241, 251}) {
        std::vector<unsigned> expected;
        for (unsigned k = 0; k + 3 <= p; k += 2) {
            if (mpz_divisible_ui_p(euler[k].get_mpz_t(), p) != 0) {
                expected.push_back(k + 1);
            }
        }
        CAPTURE(p);
        CHECK(is_k_regular(p, gauss).failing_chi_indices == expected);
    }
    // 149 is irregular only through the boundary index; 241 also fails at 211
    CHECK(is_k_regular(149, gauss).failing_chi_indices == std::vector<unsigned>{147});
    CHECK(is_k_regular(241, gauss).failing_chi_indices == std::vector<unsigned>{211, 239});
}

TEST_CASE("report invariants") {
    for (std::int64_t d : {-1, -2, -5, -7, -15, -23}) {
        const ImaginaryQuadraticField field(d);
        for (std::uint64_t p = 5; p < 120; ++p) {
            if (!is_prime(p) || field.conductor() % p == 0) {
                continue;
            }
            const auto report = is_k_regular(p, field);
            CAPTURE(d);
            CAPTURE(p);
            REQUIRE(report.is_regular ==
                    (report.failing_even_indices.empty() && report.failing_chi_indices.empty() && !report.error));
            for (unsigned k : report.failing_even_indices) {
                REQUIRE((k % 2 == 0 && k >= 2 && k + 3 <= p));
            }
            for (unsigned k : report.failing_chi_indices) {
                REQUIRE((k % 2 == 1 && k + 2 <= p));
            }
            if (!is_q_regular(p).regular) {
                REQUIRE_FALSE(report.is_regular);
            }
            REQUIRE(report == is_k_regular(p, field));
        }
    }
}

TEST_CASE("p dividing h(K) is caught by B_{1,chi}") {
    // Q(sqrt(-47)) has class number 5; Q(sqrt(-71)) has 7
    const ImaginaryQuadraticField k47(-47), k71(-71);
    CHECK(k47.class_number() == 5);
    CHECK(k71.class_number() == 7);
    const auto r5 = is_k_regular(5, k47);
    CHECK_FALSE(r5.is_regular);
    CHECK(r5.failing_chi_indices.front() == 1);
    CHECK(is_k_regular(7, k71).failing_chi_indices.front() == 1);
}

TEST_CASE("ramified and invalid exponents") {
    CHECK_THROWS_AS(is_k_regular(5, ImaginaryQuadraticField(-5)), RamifiedError);
    CHECK_THROWS_AS(is_k_regular(7, ImaginaryQuadraticField(-7)), RamifiedError);
    CHECK_THROWS_AS(is_k_regular(3, ImaginaryQuadraticField(-1)), DomainError);
    CHECK_THROWS_AS(is_k_regular(2, ImaginaryQuadraticField(-1)), DomainError);
}
