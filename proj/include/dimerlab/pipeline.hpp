#pragma once

#include "dimerlab/boundary.hpp"
#include "dimerlab/polygon.hpp"

#include <string>
#include <vector>

namespace dimerlab {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { Verified = 0, InvalidInput = 1, Inconclusive = 2, Failed = 3 };

struct VerifyOptions {
    SearchBudget budget;
    bool reflect = false;
};

/// Everything the verify command reports for one triangulation.
struct VerifyResult {
    Triangulation triangulation{3, {}};
    int m = 2;
    SearchBudget budget;
    ValidationReport axioms;
    BoundaryPresentation presentation;
    GammaMatch match;
    RelationReport relations;
    CentralElementReport central;
    std::string error; // set when extraction stopped early
    int status = ExitCode::Verified;
    double seconds = 0;
};

/// Builds the quiver, extracts the presentation, matches Gamma(m, n) and runs
/// the relation and central-element checks.
VerifyResult verify_triangulation(const Triangulation& t, int m, const VerifyOptions& options = {});

struct SweepRow {
    int m = 2;
    int n = 3;
    int index = 0; // position in enumerate_triangulations(n)
    std::string triangulation;
    bool matched = false;
    std::size_t relations_total = 0;
    std::size_t relations_equal = 0;
    std::size_t relations_unknown = 0;
    bool central = false;
    int status = ExitCode::Verified;
    std::string error;
    double seconds = 0;
};

struct SweepReport {
    std::vector<int> ms;
    int min_n = 3;
    int max_n = 3;
    SearchBudget budget;
    std::vector<SweepRow> rows; // sorted by (m, n, index)

    int status() const;
};

/// Verifies every triangulation for each m and min_n <= n <= max_n, spreading
/// rows over `workers` threads.
SweepReport run_sweep(const std::vector<int>& ms, int min_n, int max_n, const VerifyOptions& options,
                      int workers = 1);

} // namespace dimerlab
