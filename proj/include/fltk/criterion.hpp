#pragma once

// Verdict engine: searches for an auxiliary prime q = n p + 1 and combines
// it with K-regularity and the splitting of p into a conclusion about the
// Fermat equation of exponent p over an imaginary quadratic field.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fltk/field.hpp"
#include "fltk/regularity.hpp"

namespace fltk {

inline constexpr std::uint64_t kDefaultNMax = 5000;

// Reason codes carried by a Verdict.
namespace reason {
inline constexpr const char* kExcludedField = "excluded field";
inline constexpr const char* kRamified = "ramified";
inline constexpr const char* kNotKRegular = "not K-regular";
inline constexpr const char* kNonIntegral = "non-integral";
inline constexpr const char* kNoAuxiliaryPrime = "no auxiliary prime";
}  // namespace reason

enum class SplittingType { Split, Inert, Ramified };

const char* to_string(SplittingType t);

/// Behaviour of the prime q in K, from kronecker(disc, q).
SplittingType splitting_type(std::uint64_t q, const ImaginaryQuadraticField& field);

struct AuxiliaryWitness {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    bool split_ok = false;
    bool npow_ok = false;
    bool wn_ok = false;

    bool valid() const { return split_ok && npow_ok && wn_ok; }
    friend bool operator==(const AuxiliaryWitness&, const AuxiliaryWitness&) = default;
};

/// Smallest n <= n_max with q = n p + 1 prime, split in K, q not dividing
/// n^n - 1 and q not dividing W_n. Empty if none qualifies.
std::optional<AuxiliaryWitness> find_auxiliary(std::uint64_t p, const ImaginaryQuadraticField& field,
                                               std::uint64_t n_max);

/// Evaluates the four tests for a single n (the witness may be invalid).
/// Returns empty when n p + 1 is not prime.
std::optional<AuxiliaryWitness> test_auxiliary(std::uint64_t p, const ImaginaryQuadraticField& field,
                                               std::uint64_t n);

enum class FirstCase { Proven, Unproven };
enum class SecondCase { ProvenInert, ProvenSplit, Unproven };

struct Verdict {
    std::uint64_t p = 0;
    ImaginaryQuadraticField field{-1};
    SplittingType p_splitting = SplittingType::Inert;
    FirstCase first_case = FirstCase::Unproven;
    SecondCase second_case = SecondCase::Unproven;
    bool full_flt = false;
    std::vector<std::string> reasons;
    std::optional<AuxiliaryWitness> witness;
    RegularityReport regularity;

    bool has_reason(const std::string& code) const;
};

/// DomainError when p is not a prime >= 5 or n_max == 0.
Verdict verdict(std::uint64_t p, const ImaginaryQuadraticField& field, std::uint64_t n_max = kDefaultNMax);

}  // namespace fltk
