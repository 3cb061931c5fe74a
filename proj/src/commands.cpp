#include "fltk/commands.hpp"

#include <fstream>
#include <sstream>

#include "fltk/resultant.hpp"
#include "fltk/scan.hpp"

namespace fltk {

namespace {

int exit_for(const std::string& label) {
    if (label == "proven") {
        return exit_code::kProven;
    }
    if (label == "inconclusive") {
        return exit_code::kInconclusive;
    }
    return exit_code::kPartial;
}

std::string join(const std::vector<unsigned>& xs) {
    std::ostringstream s;
    s << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s << (i ? ", " : "") << xs[i];
    }
    s << ']';
    return s.str();
}

void render_text(const Verdict& v, std::ostream& out) {
    const auto& reg = v.regularity;
    out << "field:        " << v.field.name() << " (disc " << v.field.discriminant() << ", h "
        << v.field.class_number() << ")\n";
    out << "exponent:     p = " << v.p << " (" << to_string(v.p_splitting) << ")\n";
    out << "K-regular:    " << (reg.is_regular ? "yes" : "no");
    if (!reg.is_regular) {
        out << " (B_k: " << join(reg.failing_even_indices) << ", B_k,chi: " << join(reg.failing_chi_indices);
        if (reg.error) {
            out << ", error: " << *reg.error;
        }
        out << ')';
    }
    out << '\n';
    out << "witness:      ";
    if (v.witness) {
        out << "n = " << v.witness->n << ", q = " << v.witness->q;
        if (v.first_case != FirstCase::Proven) {
            out << " (not credited)";
        }
        out << '\n';
    } else {
        out << "none\n";
    }
    out << "first case:   " << (v.first_case == FirstCase::Proven ? "proven" : "unproven") << '\n';
    out << "second case:  ";
    switch (v.second_case) {
        case SecondCase::ProvenInert:
            out << "proven (p inert)\n";
            break;
        case SecondCase::ProvenSplit:
            out << "proven (p split)\n";
            break;
        case SecondCase::Unproven:
            out << "unproven\n";
            break;
    }
    out << "verdict:      " << verdict_label(v) << '\n';
    out << "reasons:      ";
    for (std::size_t i = 0; i < v.reasons.size(); ++i) {
        out << (i ? "; " : "") << v.reasons[i];
    }
    out << '\n';
}

}  // namespace

int cmd_check(std::int64_t d, std::uint64_t p, std::uint64_t n_max, OutputFormat format, std::ostream& out,
              std::ostream& err) {
    try {
        const ImaginaryQuadraticField field(d);
        const Verdict v = verdict(p, field, n_max);
        if (format == OutputFormat::Json) {
            const ScanRecord r = make_record(v);
            validate(r);
            out << to_json_line(r) << '\n';
        } else {
            render_text(v, out);
        }
        return exit_for(verdict_label(v));
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    }
}

int cmd_scan(std::int64_t d, std::uint64_t p_max, std::uint64_t n_max, unsigned jobs, const std::string& path,
             std::ostream& out, std::ostream& err) {
    if (jobs == 0 || n_max == 0) {
        err << "error: --jobs and --n-max must be positive\n";
        return exit_code::kUsage;
    }
    try {
        ImaginaryQuadraticField{d};
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot write " << path << '\n';
        return exit_code::kOutput;
    }
    std::size_t proven = 0, partial = 0, inconclusive = 0, regular = 0;
    try {
        scan_range(ScanOptions{d, p_max, n_max, jobs}, [&](const ScanRecord& r) {
            file << to_json_line(r) << '\n';
            if (!file) {
                throw std::runtime_error("write failed");
            }
            regular += r.regular ? 1 : 0;
            if (r.verdict == "proven") {
                ++proven;
            } else if (r.verdict == "inconclusive") {
                ++inconclusive;
            } else {
                ++partial;
            }
        });
    } catch (const std::runtime_error& e) {
        err << "error: " << path << ": " << e.what() << '\n';
        return exit_code::kOutput;
    }
    file.close();
    if (!file) {
        err << "error: cannot write " << path << '\n';
        return exit_code::kOutput;
    }
    const std::size_t total = proven + partial + inconclusive;
    out << "d = " << d << ", 5 <= p <= " << p_max << ", n_max = " << n_max << '\n';
    out << "primes        " << total << '\n';
    out << "K-regular     " << regular << '\n';
    out << "proven        " << proven << '\n';
    out << "partial       " << partial << '\n';
    out << "inconclusive  " << inconclusive << '\n';
    return 0;
}

int cmd_wn(std::uint64_t n, std::ostream& out, std::ostream& err) {
    if (n == 0 || n > kMaxExactN) {
        err << "error: --n must lie in [1, " << kMaxExactN << "]\n";
        return exit_code::kUsage;
    }
    out << w_exact(static_cast<unsigned>(n)).get_str() << '\n';
    return 0;
}

}  // namespace fltk
