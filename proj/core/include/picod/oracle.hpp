#pragma once

#include <optional>
#include <string>

#include "picod/encoder.hpp"
#include "picod/instance.hpp"

namespace picod {

struct BruteForceResult {
    int length;
    FieldMatrix witness;
};

/// Smallest number of rows of any valid linear k-vector encoder over GF(q),
/// by column-by-column search with receiver pruning (a fully assigned edge
/// that satisfies no one kills the branch) and row-symmetry canonicalization.
/// Independent of the construction routines; the per-receiver decodability
/// test is the shared referee. Returns nullopt past max_rows.
/// Exponential; practical around q = 2, rows <= 4, m*k <= 10.
std::optional<BruteForceResult> brute_force_length(const PicodInstance& inst, int q, int k,
                                                   int max_rows);

struct ChainBudgets {
    int chi_palette = 0;     ///< 0 means m*k
    int alpha_total = 0;     ///< 0 means m*k
    int delta_palette = 0;   ///< 0 means m*k
    int lambda_palette = 0;  ///< 0 means m*k
    int length_rows = 0;     ///< 0 means min(m, n)
};

struct ChainReport {
    std::optional<int> l_star;
    std::optional<int> chi;
    std::optional<int> alpha;
    std::optional<int> delta;
    std::optional<int> lambda;
    bool complete = false;     ///< every search finished within budget
    bool chain_ok = false;     ///< l* <= lambda = delta <= alpha <= chi
    std::string violation;     ///< counterexample description when the chain breaks
};

/// Runs all exact searches and checks the parameter chain. A budget overrun
/// yields a partial report with complete = false and no chain verdict.
ChainReport certify_chain(const PicodInstance& inst, int k = 1, const ChainBudgets& budgets = {});

}  // namespace picod
