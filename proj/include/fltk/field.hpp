#pragma once

#include <cstdint>
#include <string>

#include "fltk/bernoulli.hpp"

namespace fltk {

/// Largest |discriminant| accepted; the character is tabulated over one period.
inline constexpr std::int64_t kMaxConductor = 100'000'000;

/// K = Q(sqrt(d)) for squarefree d < 0.
class ImaginaryQuadraticField {
  public:
    /// DomainError unless d is negative and squarefree.
    explicit ImaginaryQuadraticField(std::int64_t d);

    std::int64_t d() const { return d_; }
    /// d when d = 1 mod 4, else 4d.
    std::int64_t discriminant() const { return disc_; }
    std::uint64_t conductor() const { return character_.conductor(); }
    const QuadraticCharacter& character() const { return character_; }
    /// Roots of unity in K: 4 for Q(i), 6 for Q(sqrt(-3)), else 2.
    int unit_count() const;
    /// Q(sqrt(-3)) is outside the scope of the auxiliary-prime criterion.
    bool is_excluded() const { return d_ == -3; }
    std::string name() const;
    /// h(K) = -w B_{1,chi} / 2, with B_{1,chi} = (1/f) sum_{a=1}^{f} chi(a) a.
    std::uint64_t class_number() const;

    friend bool operator==(const ImaginaryQuadraticField& a, const ImaginaryQuadraticField& b) {
        return a.d_ == b.d_;
    }

  private:
    std::int64_t d_;
    std::int64_t disc_;
    QuadraticCharacter character_;
};

}  // namespace fltk
