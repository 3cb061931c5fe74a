#include "fltk/scan.hpp"

#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>

#include "json.hpp"

namespace fltk {

using ordered_json = nlohmann::ordered_json;

std::string verdict_label(const Verdict& v) {
    const bool first = v.first_case == FirstCase::Proven;
    const bool second = v.second_case != SecondCase::Unproven;
    if (first && second) {
        return "proven";
    }
    if (first) {
        return "first-case";
    }
    if (second) {
        return "second-case";
    }
    return "inconclusive";
}

ScanRecord make_record(const Verdict& v) {
    ScanRecord r;
    r.p = v.p;
    r.d = v.field.d();
    r.regular = v.regularity.is_regular;
    if (v.first_case == FirstCase::Proven && v.witness) {
        r.first_case_n = v.witness->n;
        r.q = v.witness->q;
    }
    switch (v.second_case) {
        case SecondCase::ProvenInert:
            r.second_case = "inert";
            break;
        case SecondCase::ProvenSplit:
            r.second_case = "split";
            break;
        case SecondCase::Unproven:
            r.second_case = "none";
            break;
    }
    r.verdict = verdict_label(v);
    r.reasons = v.reasons;
    return r;
}

void validate(const ScanRecord& r) {
    auto fail = [&](const std::string& what) {
        throw DomainError("invalid scan record for p=" + std::to_string(r.p) + ": " + what);
    };
    if (r.second_case != "inert" && r.second_case != "split" && r.second_case != "none") {
        fail("second_case");
    }
    if (r.first_case_n.has_value() != r.q.has_value()) {
        fail("first_case_n and q must appear together");
    }
    if (r.q && *r.q != *r.first_case_n * r.p + 1) {
        fail("q != n p + 1");
    }
    if (r.second_case != "none" && !r.regular) {
        fail("second case proven without regularity");
    }
    const bool first = r.first_case_n.has_value();
    const bool second = r.second_case != "none";
    const std::string expected = first && second ? "proven" : first ? "first-case" : second ? "second-case" : "inconclusive";
    if (r.verdict != expected) {
        fail("verdict '" + r.verdict + "' does not match its components");
    }
}

std::string to_json_line(const ScanRecord& r) {
    ordered_json j;
    j["p"] = r.p;
    j["d"] = r.d;
    j["regular"] = r.regular;
    if (r.first_case_n) {
        j["first_case_n"] = *r.first_case_n;
    }
    if (r.q) {
        j["q"] = *r.q;
    }
    j["second_case"] = r.second_case;
    j["verdict"] = r.verdict;
    j["reasons"] = r.reasons;
    j["tool_version"] = r.tool_version;
    j["criterion_variant"] = r.criterion_variant;
    return j.dump();
}

ScanRecord parse_record(const std::string& line) {
    try {
        const auto j = ordered_json::parse(line);
        ScanRecord r;
        r.p = j.at("p").get<std::uint64_t>();
        r.d = j.at("d").get<std::int64_t>();
        r.regular = j.at("regular").get<bool>();
        if (j.contains("first_case_n")) {
            r.first_case_n = j.at("first_case_n").get<std::uint64_t>();
        }
        if (j.contains("q")) {
            r.q = j.at("q").get<std::uint64_t>();
        }
        r.second_case = j.at("second_case").get<std::string>();
        r.verdict = j.at("verdict").get<std::string>();
        r.reasons = j.at("reasons").get<std::vector<std::string>>();
        r.tool_version = j.at("tool_version").get<std::string>();
        r.criterion_variant = j.at("criterion_variant").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed scan record: ") + e.what());
    }
}

void scan_range(const ScanOptions& opts, const std::function<void(const ScanRecord&)>& sink) {
    if (opts.jobs == 0) {
        throw DomainError("scan: jobs must be positive");
    }
    const ImaginaryQuadraticField field(opts.d);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 5; p <= opts.p_max; ++p) {
        if (is_prime(p)) {
            primes.push_back(p);
        }
    }
    if (primes.empty()) {
        return;
    }

    struct Slot {
        std::optional<ScanRecord> record;
        std::exception_ptr error;
    };
    std::vector<Slot> slots(primes.size());
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= primes.size() || stop.load()) {
                return;
            }
            Slot slot;
            try {
                ScanRecord r = make_record(verdict(primes[i], field, opts.n_max));
                validate(r);
                slot.record = std::move(r);
            } catch (...) {
                slot.error = std::current_exception();
            }
            {
                std::lock_guard lock(mutex);
                slots[i] = std::move(slot);
            }
            ready.notify_all();
        }
    };

    const unsigned workers = std::min<std::size_t>(opts.jobs, primes.size());
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(worker);
    }

    // single writer: emit in index order as the prefix completes
    try {
        for (std::size_t i = 0; i < primes.size(); ++i) {
            Slot slot;
            {
                std::unique_lock lock(mutex);
                ready.wait(lock, [&] { return slots[i].record.has_value() || slots[i].error != nullptr; });
                slot = std::move(slots[i]);
            }
            if (slot.error) {
                std::rethrow_exception(slot.error);
            }
            sink(*slot.record);
        }
    } catch (...) {
        stop = true;
        throw;
    }
}

std::vector<ScanRecord> scan_range(const ScanOptions& opts) {
    std::vector<ScanRecord> out;
    scan_range(opts, [&](const ScanRecord& r) { out.push_back(r); });
    return out;
}

}  // namespace fltk
