#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include "riddle/cli.hpp"
#include "riddle/errors.hpp"

namespace riddle::cli {

namespace {

/// Runs body(i) for i in [0, n) on up to `threads` workers. Callers write
/// results into slots indexed by i, so output order never depends on timing.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += threads)
                body(i);
        });
}

void require_range(const char* what, std::int64_t value, std::int64_t lo, std::int64_t hi) {
    if (value < lo || value > hi)
        throw InvalidBounds(std::string(what) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "], got " + std::to_string(value));
}

std::string describe(const PigeonholeInstance& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.colors().size(); ++i)
        out += (i ? ", " : "") + p.colors()[i].color + ": " + std::to_string(p.colors()[i].count);
    return out + "), required " + std::to_string(p.required());
}

void print(std::ostream& out, const char* kind, const SweepSummary& s) {
    out << kind << ": " << s.comparisons << " comparisons, " << s.matches << " matches, " << s.mismatches
        << " mismatches\n";
    if (s.first_mismatch)
        out << "  first mismatch: " << *s.first_mismatch << '\n';
    for (const auto& n : s.notes)
        out << "  " << n << '\n';
}

}  // namespace

SweepSummary sweep_weighing(std::int64_t max_objects, unsigned threads) {
    require_range("max objects", max_objects, 1, kMaxWeighingObjects);
    const WeighingOracle oracle(max_objects);
    const auto count = static_cast<std::size_t>(max_objects - 1);  // N = 2 .. max
    std::vector<std::int64_t> formula(count);
    std::vector<std::int64_t> minimax(count);
    parallel_for(count, threads, [&](std::size_t i) {
        const auto n = static_cast<std::int64_t>(i) + 2;
        formula[i] = min_weighings_formula(WeighingInstance(n)).weighings;
        minimax[i] = oracle.weighings(n);
    });

    SweepSummary s;
    for (std::size_t i = 0; i < count; ++i) {
        ++s.comparisons;
        if (formula[i] == minimax[i]) {
            ++s.matches;
            continue;
        }
        ++s.mismatches;
        if (!s.first_mismatch)
            s.first_mismatch = "N=" + std::to_string(i + 2) + ": formula " + std::to_string(formula[i]) +
                               ", oracle " + std::to_string(minimax[i]);
    }
    return s;
}

SweepSummary sweep_pigeonhole(std::int64_t max_colors, std::int64_t max_count, std::int64_t max_required,
                              unsigned threads) {
    require_range("max colors", max_colors, 1, kMaxPigeonholeColors);
    require_range("max count", max_count, 0, kMaxPigeonholeCount);
    require_range("max required", max_required, 1, kMaxPigeonholeRequired);

    std::vector<PigeonholeInstance> instances;
    for (std::int64_t colors = 1; colors <= max_colors; ++colors) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(colors), 0);
        while (true) {
            std::vector<ColorCount> cc;
            for (std::size_t i = 0; i < counts.size(); ++i)
                cc.push_back({"c" + std::to_string(i + 1), counts[i]});
            for (std::int64_t r = 1; r <= max_required; ++r)
                instances.emplace_back(cc, r);
            std::size_t i = 0;
            while (i < counts.size() && counts[i] == max_count)
                counts[i++] = 0;
            if (i == counts.size())
                break;
            ++counts[i];
        }
    }

    // Oracle value per instance; -1 marks infeasible.
    std::vector<std::int64_t> oracle(instances.size());
    parallel_for(instances.size(), threads, [&](std::size_t i) {
        oracle[i] = instances[i].feasible() ? guarantee_draws_oracle(instances[i]) : -1;
    });

    SweepSummary s;
    std::int64_t outside = 0, over = 0, infeasible = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& p = instances[i];
        const std::int64_t f = guarantee_draws_formula(p.n_colors(), p.required());
        if (oracle[i] < 0) {
            ++infeasible;
            continue;
        }
        if (!p.formula_applicable()) {
            ++outside;
            if (f > oracle[i])
                ++over;
            continue;
        }
        ++s.comparisons;
        if (f == oracle[i]) {
            ++s.matches;
        } else {
            ++s.mismatches;
            if (!s.first_mismatch)
                s.first_mismatch = describe(p) + ": formula " + std::to_string(f) + ", oracle " + std::to_string(oracle[i]);
        }
    }
    s.notes.push_back("outside applicability: " + std::to_string(outside) + " feasible instances, formula over-counts on " +
                      std::to_string(over));
    s.notes.push_back("infeasible: " + std::to_string(infeasible));
    return s;
}

TransferSweep sweep_transfer(std::int64_t max_n, std::int64_t max_d) {
    require_range("max n", max_n, 1, kMaxTransferSize);
    require_range("max d", max_d, 1, kMaxTransferSize);
    const auto rows = transfer_formula_survey(max_n, max_d);
    TransferSweep t;
    for (const auto& r : rows) {
        ++t.summary.comparisons;
        if (r.match) {
            ++t.summary.matches;
        } else {
            ++t.summary.mismatches;
            if (!t.summary.first_mismatch)
                t.summary.first_mismatch = r.key + ": enumerated " + r.enumerated.to_string() + ", formula " +
                                           r.formula.to_string();
        }
    }
    t.summary.notes.push_back("mismatches are expected: 2n/(n+d) is exact only on part of the family");
    t.csv = survey_to_csv(rows);
    return t;
}

unsigned sweep_threads() {
    const char* env = std::getenv("RIDDLE_FORGE_THREADS");
    if (!env)
        return std::max(1u, std::thread::hardware_concurrency());
    const std::string_view text(env);
    unsigned value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value == 0)
        throw InvalidBounds("RIDDLE_FORGE_THREADS must be a positive integer, got '" + std::string(text) + "'");
    return value;
}

int cmd_sweep(const SweepRequest& request, std::ostream& out, std::ostream& err) {
    try {
        const unsigned threads = sweep_threads();
        switch (request.kind) {
        case SweepKind::weighing: {
            const auto s = sweep_weighing(request.max_objects, threads);
            print(out, "weighing", s);
            return s.mismatches == 0 ? 0 : 2;
        }
        case SweepKind::pigeonhole: {
            const auto s = sweep_pigeonhole(request.max_colors, request.max_count, request.max_required, threads);
            print(out, "pigeonhole", s);
            return s.mismatches == 0 ? 0 : 2;
        }
        case SweepKind::transfer: {
            const auto t = sweep_transfer(request.max_n, request.max_d);
            print(out, "transfer", t.summary);
            if (request.report_path) {
                std::ofstream file(*request.report_path, std::ios::binary);
                file << t.csv;
                if (!file) {
                    err << *request.report_path << ": cannot write report\n";
                    return 1;
                }
                out << "  report written to " << *request.report_path << '\n';
            } else {
                out << t.csv;
            }
            return 0;
        }
        }
    } catch (const InvalidBounds& e) {
        err << "invalid bounds: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace riddle::cli
