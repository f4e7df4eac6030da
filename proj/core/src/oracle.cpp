#include "picod/oracle.hpp"

#include <algorithm>
#include <vector>

#include "picod/collection.hpp"
#include "picod/localcf.hpp"

namespace picod {

namespace {

// Column assignments are canonical under row permutation and row scaling:
// rows first touched in column order get consecutive indices, and the first
// entry of every fresh row is 1.
class LengthSearch {
  public:
    LengthSearch(const PicodInstance& inst, int q, int k, int rows)
        : inst_(inst), q_(q), k_(k), rows_(rows), g_(q, k, rows, inst.message_count()) {
        const int m = inst.message_count();
        edges_closing_at_.assign(static_cast<size_t>(m), {});
        for (int r = 0; r < inst.receiver_count(); ++r)
            edges_closing_at_[static_cast<size_t>(inst.request_set(r).back())].push_back(r);
    }

    std::optional<FieldMatrix> run() {
        if (found(0, 0)) return g_;
        return std::nullopt;
    }

  private:
    bool found(int flat_col, int used_rows) {
        const int total_cols = inst_.message_count() * k_;
        if (flat_col == total_cols) return true;
        const int vertex = flat_col / k_;
        const bool closes_vertex = flat_col % k_ == k_ - 1;

        // choose values for already used rows, and a fresh all-ones tail
        std::vector<int> column(static_cast<size_t>(rows_), 0);
        for (int fresh = 0; fresh + used_rows <= rows_; ++fresh) {
            for (int i = 0; i < fresh; ++i) column[static_cast<size_t>(used_rows + i)] = 1;
            if (enumerate_used(column, 0, used_rows, fresh, flat_col, vertex, closes_vertex))
                return true;
            for (int i = 0; i < fresh; ++i) column[static_cast<size_t>(used_rows + i)] = 0;
        }
        return false;
    }

    bool enumerate_used(std::vector<int>& column, int row, int used_rows, int fresh, int flat_col,
                        int vertex, bool closes_vertex) {
        if (row == used_rows) {
            for (int r = 0; r < rows_; ++r) g_.at(r, flat_col) = column[static_cast<size_t>(r)];
            bool viable = true;
            if (closes_vertex) {
                for (int e : edges_closing_at_[static_cast<size_t>(vertex)])
                    if (!satisfies_receiver(g_, inst_, e).satisfied) {
                        viable = false;
                        break;
                    }
            }
            if (viable && found(flat_col + 1, used_rows + fresh)) return true;
            for (int r = 0; r < rows_; ++r) g_.at(r, flat_col) = 0;
            return false;
        }
        for (int v = 0; v < q_; ++v) {
            column[static_cast<size_t>(row)] = v;
            if (enumerate_used(column, row + 1, used_rows, fresh, flat_col, vertex, closes_vertex))
                return true;
        }
        column[static_cast<size_t>(row)] = 0;
        return false;
    }

    const PicodInstance& inst_;
    int q_, k_, rows_;
    FieldMatrix g_;
    std::vector<std::vector<int>> edges_closing_at_;
};

}  // namespace

std::optional<BruteForceResult> brute_force_length(const PicodInstance& inst, int q, int k,
                                                   int max_rows) {
    if (!gf::is_prime(q)) throw std::invalid_argument("field modulus must be prime");
    if (k < 1) throw std::invalid_argument("fold must be >= 1");
    if (inst.receiver_count() == 0)
        return BruteForceResult{0, FieldMatrix(q, k, 0, inst.message_count())};
    for (int rows = 1; rows <= max_rows; ++rows) {
        auto witness = LengthSearch(inst, q, k, rows).run();
        if (witness) return BruteForceResult{rows, std::move(*witness)};
    }
    return std::nullopt;
}

ChainReport certify_chain(const PicodInstance& inst, int k, const ChainBudgets& budgets) {
    if (k < 1) throw std::invalid_argument("fold must be >= 1");
    const int m = inst.message_count(), n = inst.receiver_count();
    const int default_palette = std::max(m * k, k);
    ChainReport report;

    const int chi_cap = budgets.chi_palette > 0 ? budgets.chi_palette : default_palette;
    if (auto chi = exact_chi_cf(inst, k, chi_cap)) report.chi = chi->colors;

    // instances past the exhaustive-search caps yield a partial report
    const int alpha_cap = budgets.alpha_total > 0 ? budgets.alpha_total : default_palette;
    if (n <= 14)
        if (auto alpha = exact_alpha_cf(inst, k, alpha_cap)) report.alpha = alpha->alpha;

    const int delta_cap = budgets.delta_palette > 0 ? budgets.delta_palette : default_palette;
    if (delta_cap <= 63)
        if (auto delta = exact_delta_k(inst, k, delta_cap)) report.delta = delta->delta;

    const int lambda_cap = budgets.lambda_palette > 0 ? budgets.lambda_palette : default_palette;
    if (n <= 14 && lambda_cap <= 63)
        if (auto lambda = exact_lambda_k(inst, k, lambda_cap)) report.lambda = lambda->lambda;

    const int rows_cap = budgets.length_rows > 0 ? budgets.length_rows : std::max(std::min(m, n), 1);
    if (auto len = brute_force_length(inst, 2, k, rows_cap)) report.l_star = len->length;

    report.complete = report.chi && report.alpha && report.delta && report.lambda && report.l_star;
    if (!report.complete) return report;

    report.chain_ok = true;
    auto fail = [&](const std::string& why) {
        report.chain_ok = false;
        if (!report.violation.empty()) report.violation += "; ";
        report.violation += why;
    };
    if (*report.lambda != *report.delta)
        fail("lambda " + std::to_string(*report.lambda) + " != delta " + std::to_string(*report.delta));
    // the local parameters promise short codes over fields of size >= |D|;
    // the binary optimum can sit above them once the essential set outgrows GF(2)
    if (*report.l_star > *report.lambda)
        fail("l* " + std::to_string(*report.l_star) + " over GF(2) > lambda " +
             std::to_string(*report.lambda));
    if (*report.delta > *report.alpha)
        fail("delta " + std::to_string(*report.delta) + " > alpha " + std::to_string(*report.alpha));
    if (*report.alpha > *report.chi)
        fail("alpha " + std::to_string(*report.alpha) + " > chi " + std::to_string(*report.chi));
    return report;
}

}  // namespace picod
