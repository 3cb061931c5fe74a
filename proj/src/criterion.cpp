#include "fltk/criterion.hpp"

#include <algorithm>

#include "fltk/resultant.hpp"

namespace fltk {

const char* to_string(SplittingType t) {
    switch (t) {
        case SplittingType::Split:
            return "split";
        case SplittingType::Inert:
            return "inert";
        case SplittingType::Ramified:
            return "ramified";
    }
    return "?";
}

SplittingType splitting_type(std::uint64_t q, const ImaginaryQuadraticField& field) {
    if (q > static_cast<std::uint64_t>(INT64_MAX)) {
        throw RangeError("splitting_type: q above 2^63");
    }
    switch (kronecker(field.discriminant(), static_cast<std::int64_t>(q))) {
        case 1:
            return SplittingType::Split;
        case -1:
            return SplittingType::Inert;
        default:
            return SplittingType::Ramified;
    }
}

std::optional<AuxiliaryWitness> test_auxiliary(std::uint64_t p, const ImaginaryQuadraticField& field,
                                               std::uint64_t n) {
    std::uint64_t q = 0;
    if (__builtin_mul_overflow(n, p, &q) || q + 1 > static_cast<std::uint64_t>(INT64_MAX)) {
        throw RangeError("auxiliary prime n p + 1 does not fit in 63 bits");
    }
    q += 1;
    if (!is_prime(q)) {
        return std::nullopt;
    }
    AuxiliaryWitness w{n, q};
    w.split_ok = splitting_type(q, field) == SplittingType::Split;
    w.npow_ok = !n_power_divides(n, q);
    w.wn_ok = !w_divides(n, q);
    return w;
}

std::optional<AuxiliaryWitness> find_auxiliary(std::uint64_t p, const ImaginaryQuadraticField& field,
                                               std::uint64_t n_max) {
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        std::uint64_t q = 0;
        if (__builtin_mul_overflow(n, p, &q) || q + 1 > static_cast<std::uint64_t>(INT64_MAX)) {
            throw RangeError("auxiliary prime n p + 1 does not fit in 63 bits");
        }
        q += 1;
        // cheapest test first; each later test only runs if the earlier passed
        if (!is_prime(q) || splitting_type(q, field) != SplittingType::Split || n_power_divides(n, q) ||
            w_divides(n, q)) {
            continue;
        }
        return AuxiliaryWitness{n, q, true, true, true};
    }
    return std::nullopt;
}

bool Verdict::has_reason(const std::string& code) const {
    return std::find(reasons.begin(), reasons.end(), code) != reasons.end();
}

Verdict verdict(std::uint64_t p, const ImaginaryQuadraticField& field, std::uint64_t n_max) {
    if (p < 5 || !is_prime(p)) {
        throw DomainError("verdict: p must be a prime >= 5, got " + std::to_string(p));
    }
    if (n_max == 0) {
        throw DomainError("verdict: n_max must be positive");
    }
    Verdict v;
    v.p = p;
    v.field = field;
    v.p_splitting = splitting_type(p, field);

    if (field.is_excluded()) {
        v.reasons.emplace_back(reason::kExcludedField);
    }

    if (v.p_splitting == SplittingType::Ramified) {
        v.regularity.p = p;
        v.regularity.field = field;
        v.regularity.failing_even_indices = is_q_regular(p).failing_even_indices;
        v.regularity.error = reason::kRamified;
        v.regularity.is_regular = false;
        v.reasons.emplace_back(reason::kRamified);
    } else {
        v.regularity = is_k_regular(p, field);
        if (v.regularity.error) {
            v.reasons.emplace_back(reason::kNonIntegral);
        }
        if (!v.regularity.is_regular) {
            v.reasons.emplace_back(reason::kNotKRegular);
        }
    }

    v.witness = find_auxiliary(p, field, n_max);
    if (!v.witness) {
        v.reasons.emplace_back(reason::kNoAuxiliaryPrime);
    }
    // The witness yields the first case only together with K-regularity
    // (which forces p not to divide h(K)) and outside Q(sqrt(-3)).
    if (v.witness && v.regularity.is_regular && !field.is_excluded()) {
        v.first_case = FirstCase::Proven;
    }

    if (v.regularity.is_regular) {
        if (v.p_splitting == SplittingType::Inert) {
            v.second_case = SecondCase::ProvenInert;
        } else if (v.p_splitting == SplittingType::Split) {
            v.second_case = SecondCase::ProvenSplit;
        }
    }

    v.full_flt = v.first_case == FirstCase::Proven && v.second_case != SecondCase::Unproven;
    return v;
}

}  // namespace fltk
