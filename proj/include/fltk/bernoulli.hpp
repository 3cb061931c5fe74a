#pragma once

// Bernoulli numbers B_k (convention B_1 = -1/2), Bernoulli polynomial values
// and generalized Bernoulli numbers B_{k,chi} for a quadratic character.
//
// Two routes are provided: exact rationals (memoized, used as the reference)
// and F_p tables of all indices below p - 1 (used for scanning).

#include <cstdint>
#include <optional>
#include <vector>

#include "fltk/arith.hpp"

namespace fltk {

/// chi(a) = kronecker(disc, a), periodic with period f = |disc|.
class QuadraticCharacter {
  public:
    explicit QuadraticCharacter(std::int64_t disc);

    std::int64_t discriminant() const { return disc_; }
    std::uint64_t conductor() const { return static_cast<std::uint64_t>(values_.size()); }
    int operator()(std::int64_t a) const;
    /// chi(-1) = -1
    bool is_odd() const { return (*this)(-1) == -1; }

  private:
    std::int64_t disc_;
    std::vector<int> values_;
};

/// Largest index served by bernoulli_exact.
inline constexpr unsigned kMaxBernoulliIndex = 2000;

/// Exact B_k for 0 <= k <= kMaxBernoulliIndex (RangeError beyond).
/// Memoized; safe to call from several threads.
ExactRational bernoulli_exact(unsigned k);

/// B_k(a / f) for 0 <= a < f.
ExactRational bernoulli_poly_at(unsigned k, std::int64_t a, std::int64_t f);

/// B_{k,chi} = f^(k-1) * sum_{a=1}^{f} chi(a) B_k(a / f), k >= 1.
ExactRational gen_bernoulli_exact(unsigned k, const QuadraticCharacter& chi);

/// Largest prime accepted by the F_p routines.
inline constexpr std::uint64_t kMaxScanPrime = 1'000'000;

/// B_0 .. B_{p-2} reduced mod p.
struct BernoulliModTable {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> values;
};

/// All B_k mod p, 0 <= k <= p - 2, by inverting the power series
/// (e^t - 1)/t over F_p. O(p^2) field operations. Requires 5 <= p <= kMaxScanPrime.
BernoulliModTable bernoulli_all_mod_p(std::uint64_t p);

/// B_{k,chi} mod p via the defining finite sum evaluated in F_p.
/// Empty result marks a value that is not p-integral. PreconditionError
/// when p | f, k == 0, k > p - 2, or the table belongs to another prime.
std::optional<std::uint64_t> gen_bernoulli_mod_p(unsigned k, const QuadraticCharacter& chi, std::uint64_t p,
                                                 const BernoulliModTable& table);

/// B_{k,chi} mod p for every 1 <= k <= p - 2 at once (entry 0 is unused),
/// as a convolution of the table with the power sums of chi. O(p^2 + f p).
std::vector<std::optional<std::uint64_t>> gen_bernoulli_all_mod_p(const QuadraticCharacter& chi,
                                                                  const BernoulliModTable& table);

}  // namespace fltk
