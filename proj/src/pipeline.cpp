#include "dimerlab/pipeline.hpp"

#include "dimerlab/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace dimerlab {

namespace {

int combine(int a, int b) {
    if (a == ExitCode::Failed || b == ExitCode::Failed) return ExitCode::Failed;
    if (a == ExitCode::Inconclusive || b == ExitCode::Inconclusive) return ExitCode::Inconclusive;
    return std::max(a, b);
}

template <class Instances>
int status_of(const Instances& instances) {
    int s = ExitCode::Verified;
    for (const auto& inst : instances) {
        if (inst.verdict.outcome == Outcome::Distinct) s = combine(s, ExitCode::Failed);
        if (inst.verdict.outcome == Outcome::Unknown) s = combine(s, ExitCode::Inconclusive);
    }
    return s;
}

} // namespace

VerifyResult verify_triangulation(const Triangulation& t, int m, const VerifyOptions& options) {
    auto start = std::chrono::steady_clock::now();
    VerifyResult r;
    r.triangulation = t;
    r.m = m;
    r.budget = options.budget;

    QuiverWithFaces q = quiver_of(t, m);
    r.axioms = validate_dimer_model(q);
    if (!r.axioms.ok()) {
        r.status = ExitCode::Failed;
        r.error = "dimer-model axioms fail";
    } else {
        RewriteSystem rs(q, potential_relations(q));
        try {
            r.presentation = boundary_generators(rs, options.budget);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InconclusivePresentation) throw;
            r.status = ExitCode::Inconclusive;
            r.error = e.what();
        }
        if (r.error.empty()) {
            GammaQuiver g = build_gamma(m, t.n());
            r.match = match_gamma(r.presentation, g, options.reflect);
            if (!r.match.matched) {
                r.status = ExitCode::Failed;
                r.error = "no match with Gamma: " + r.match.obstruction;
            } else {
                r.relations = verify_theorem_relations(r.presentation, g, r.match, rs, options.budget);
                r.central = verify_central_element(r.presentation, rs, options.budget);
                r.status = combine(status_of(r.relations.instances), status_of(r.central.commutations));
            }
        }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

int SweepReport::status() const {
    int s = ExitCode::Verified;
    for (const auto& row : rows) s = combine(s, row.status);
    return s;
}

SweepReport run_sweep(const std::vector<int>& ms, int min_n, int max_n, const VerifyOptions& options,
                      int workers) {
    SweepReport report;
    report.ms = ms;
    report.min_n = min_n;
    report.max_n = max_n;
    report.budget = options.budget;

    struct Job {
        int m;
        int n;
        int index;
        Triangulation t;
    };
    std::vector<Job> jobs;
    for (int m : ms)
        for (int n = std::max(min_n, 3); n <= max_n; ++n) {
            auto all = enumerate_triangulations(n);
            for (int i = 0; i < static_cast<int>(all.size()); ++i) jobs.push_back({m, n, i, all[i]});
        }

    std::vector<SweepRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const Job& job = jobs[i];
            SweepRow row;
            row.m = job.m;
            row.n = job.n;
            row.index = job.index;
            row.triangulation = to_string(job.t);
            try {
                VerifyResult r = verify_triangulation(job.t, job.m, options);
                row.matched = r.match.matched;
                row.relations_total = r.relations.instances.size();
                row.relations_equal = r.relations.count(Outcome::Equal);
                row.relations_unknown = r.relations.count(Outcome::Unknown);
                row.central = r.match.matched && r.central.passed();
                row.status = r.status;
                row.error = r.error;
                row.seconds = r.seconds;
            } catch (const std::exception& e) {
                row.status = ExitCode::Failed;
                row.error = e.what();
            }
            rows[i] = std::move(row);
        }
    };
    int count = std::max(1, workers);
    std::vector<std::thread> pool;
    for (int w = 1; w < count; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return std::tie(a.m, a.n, a.index) < std::tie(b.m, b.n, b.index);
    });
    report.rows = std::move(rows);
    return report;
}

} // namespace dimerlab
