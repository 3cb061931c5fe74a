#include "fltk/regularity.hpp"

namespace fltk {

namespace {

void check_exponent(std::uint64_t p) {
    if (p < 5 || !is_prime(p)) {
        throw DomainError("regularity: p must be a prime >= 5, got " + std::to_string(p));
    }
}

}  // namespace

QRegularity is_q_regular(const BernoulliModTable& table) {
    QRegularity out;
    for (std::uint64_t k = 2; k + 3 <= table.p; k += 2) {
        if (table.values[k] == 0) {
            out.failing_even_indices.push_back(static_cast<unsigned>(k));
        }
    }
    out.regular = out.failing_even_indices.empty();
    return out;
}

QRegularity is_q_regular(std::uint64_t p) {
    check_exponent(p);
    return is_q_regular(bernoulli_all_mod_p(p));
}

RegularityReport is_k_regular(std::uint64_t p, const ImaginaryQuadraticField& field) {
    check_exponent(p);
    if (field.conductor() % p == 0) {
        throw RamifiedError("regularity: p = " + std::to_string(p) + " is ramified in " + field.name());
    }
    const BernoulliModTable table = bernoulli_all_mod_p(p);
    RegularityReport report;
    report.p = p;
    report.field = field;
    report.failing_even_indices = is_q_regular(table).failing_even_indices;

    const auto chi_values = gen_bernoulli_all_mod_p(field.character(), table);
    for (std::uint64_t k = 1; k + 2 <= p; k += 2) {
        const auto& v = chi_values[k];
        if (!v) {
            if (!report.error) {
                report.error = "non-integral at k=" + std::to_string(k);
            }
            continue;
        }
        if (*v == 0) {
            report.failing_chi_indices.push_back(static_cast<unsigned>(k));
        }
    }
    report.is_regular =
        report.failing_even_indices.empty() && report.failing_chi_indices.empty() && !report.error.has_value();
    return report;
}

}  // namespace fltk
