#pragma once

// K-regularity of p for an imaginary quadratic field K, decided from
// Bernoulli numbers: p is K-regular iff p divides none of B_2, B_4, ..., B_{p-3}
// and none of B_{1,chi}, B_{3,chi}, ..., B_{p-2,chi}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fltk/field.hpp"

namespace fltk {

/// Identifies the index ranges above; recorded in every scan record.
inline constexpr const char* kCriterionVariant = "even:2..p-3;chi-odd:1..p-2";

class RamifiedError : public DomainError {
  public:
    using DomainError::DomainError;
};

struct QRegularity {
    bool regular = true;
    /// even k in [2, p-3] with p | B_k, ascending
    std::vector<unsigned> failing_even_indices;
};

struct RegularityReport {
    std::uint64_t p = 0;
    ImaginaryQuadraticField field{-1};
    bool is_regular = false;
    std::vector<unsigned> failing_even_indices;
    /// odd k in [1, p-2] with p | B_{k,chi}, ascending
    std::vector<unsigned> failing_chi_indices;
    /// e.g. "non-integral at k=..." or "ramified"
    std::optional<std::string> error;

    friend bool operator==(const RegularityReport&, const RegularityReport&) = default;
};

/// Classical regularity from B_k mod p. DomainError unless p is a prime >= 5.
QRegularity is_q_regular(std::uint64_t p);
QRegularity is_q_regular(const BernoulliModTable& table);

/// Full diagnosis: both index lists are populated even if the first fails.
/// RamifiedError when p divides the conductor of K.
RegularityReport is_k_regular(std::uint64_t p, const ImaginaryQuadraticField& field);

}  // namespace fltk
