#include "fengrao/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

#include "fengrao/arf.hpp"
#include "fengrao/generic.hpp"

namespace fengrao {

VerifyReport verify_corpus(const VerifyOptions& options) {
    if (options.r_max < 1) throw InvalidArgument("r_max must be at least 1");
    if (options.margin < 0) throw InvalidArgument("margin must be nonnegative");
    const auto corpus = enumerate_arf_semigroups(options.max_conductor);

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> checks{0};
    std::atomic<std::size_t> failures{0};
    std::mutex lock;
    std::optional<std::tuple<std::size_t, int, Int>> first_key;
    std::optional<Mismatch> first;
    std::exception_ptr error;

    auto check_one = [&](std::size_t i) {
        const auto& s = corpus[i];
        const auto profile = FengRaoProfile::build(multiplicity_sequence(s));
        const Int c = s.conductor();
        for (int r = 1; r <= options.r_max; ++r) {
            for (Int m = c; m <= 2 * c + options.margin; ++m) {
                Mismatch row{s.small_elements(), r, m, -1, feng_rao_distance(s, r, m),
                             feng_rao_distance_oracle(s, r, m)};
                if (r == 1) row.fast = profile.delta1(m);
                if (r == 2) row.fast = profile.delta2(m);
                ++checks;
                if (row.generic == row.oracle && (row.fast < 0 || row.fast == row.generic)) continue;
                ++failures;
                const std::lock_guard guard(lock);
                const auto key = std::make_tuple(i, r, m);
                if (!first_key || key < *first_key) {
                    first_key = key;
                    first = std::move(row);
                }
            }
        }
    };

    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < corpus.size(); i = next++) check_one(i);
        } catch (...) {
            const std::lock_guard guard(lock);
            if (!error) error = std::current_exception();
            next = corpus.size();
        }
    };

    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    VerifyReport report;
    report.semigroups = corpus.size();
    report.checks = checks;
    report.mismatches = failures;
    report.first_mismatch = std::move(first);
    return report;
}

}  // namespace fengrao
