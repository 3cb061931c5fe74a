#include "fltk/field.hpp"

namespace fltk {

namespace {

std::int64_t fundamental_discriminant(std::int64_t d) {
    if (d < -kMaxConductor) {
        throw RangeError("imaginary quadratic field: conductor above " + std::to_string(kMaxConductor));
    }
    if (d >= 0 || !is_squarefree(d)) {
        throw DomainError("imaginary quadratic field: d must be negative and squarefree, got " + std::to_string(d));
    }
    const std::int64_t disc = ((d % 4) + 4) % 4 == 1 ? d : 4 * d;
    if (-disc > kMaxConductor) {
        throw RangeError("imaginary quadratic field: conductor above " + std::to_string(kMaxConductor));
    }
    return disc;
}

}  // namespace

ImaginaryQuadraticField::ImaginaryQuadraticField(std::int64_t d)
    : d_(d), disc_(fundamental_discriminant(d)), character_(disc_) {}

int ImaginaryQuadraticField::unit_count() const {
    if (d_ == -1) {
        return 4;
    }
    if (d_ == -3) {
        return 6;
    }
    return 2;
}

std::uint64_t ImaginaryQuadraticField::class_number() const {
    const auto f = static_cast<std::int64_t>(conductor());
    __int128 sum = 0;
    for (std::int64_t a = 1; a < f; ++a) {
        sum += static_cast<__int128>(character_(a)) * a;
    }
    // sum = -2 f h / w
    return static_cast<std::uint64_t>(-sum * unit_count() / (2 * f));
}

std::string ImaginaryQuadraticField::name() const {
    if (d_ == -1) {
        return "Q(i)";
    }
    return "Q(sqrt(" + std::to_string(d_) + "))";
}

}  // namespace fltk
