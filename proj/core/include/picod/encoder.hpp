#pragma once

#include <span>
#include <vector>

#include "picod/coloring.hpp"
#include "picod/gf.hpp"
#include "picod/instance.hpp"

namespace picod {

/**
 * @brief A linear encoder over GF(q): an l x (m*k) matrix whose columns are
 * indexed by (vertex, slot) pairs through the flat map vertex*k + slot.
 */
class FieldMatrix {
  public:
    FieldMatrix(int q, int fold, int rows, int message_count);
    FieldMatrix(gf::Matrix mat, int fold);

    int q() const { return mat_.q; }
    int fold() const { return k_; }
    int rows() const { return mat_.rows; }
    int cols() const { return mat_.cols; }
    int message_count() const { return mat_.cols / k_; }

    int column_index(int vertex, int slot) const { return vertex * k_ + slot; }
    int& at(int row, int col) { return mat_.at(row, col); }
    int at(int row, int col) const { return mat_.at(row, col); }

    /// Copy of the columns {vertex*k + j : j < k} as an l x k block.
    gf::Matrix vertex_block(int vertex) const;
    const gf::Matrix& plain() const { return mat_; }

    bool operator==(const FieldMatrix&) const = default;

  private:
    gf::Matrix mat_;
    int k_ = 1;
};

/// Outcome of the decodability test for one receiver.
struct ReceiverVerdict {
    int receiver = -1;
    bool satisfied = false;
    int witness = -1;        ///< decoded vertex d, smallest qualifying index
    gf::Matrix decode;       ///< k x l matrix W with W*G_d = I, W*G_i = 0 for i in I_r\d
};

struct ValidationReport {
    bool valid = false;
    std::vector<ReceiverVerdict> verdicts;
    std::vector<int> failing;  ///< receivers left unsatisfied
};

/// Indicator encoder of a coloring: column (i, j) is the basis vector of
/// color C_{i,j}, giving an L x mk matrix (GF(2) by default).
FieldMatrix indicator_matrix(const KFoldColoring& c, int q = 2);

/// Generator of a [length, dim] MDS code: Vandermonde rows over the points
/// 0..length-1. Requires q prime, q >= length >= dim >= 1. Every dim columns
/// are linearly independent.
gf::Matrix mds_generator(int length, int dim, int q);

/// MDS encoder of a coloring with essential color set `essential`: columns
/// carrying colors outside the set are zero, the rest take the matching
/// generator column. Row count is the essential-color width of the coloring.
FieldMatrix mds_matrix(const KFoldColoring& c, std::span<const int> essential, int q,
                       const PicodInstance& inst);

/// Same column rule for a subset that satisfies only part of the edge set
/// (one member of a covering family). Rows equal the subset's width over the
/// edges it satisfies; the subset must satisfy at least one edge.
FieldMatrix mds_cover_block(const KFoldColoring& c, std::span<const int> subset, int q,
                            const PicodInstance& inst);

/// Tests decodability at receiver r: scans d in the request-set ascending for
/// a full-rank vertex block meeting the rest of the edge trivially, and
/// computes the decode matrix on success.
ReceiverVerdict satisfies_receiver(const FieldMatrix& g, const PicodInstance& inst, int r);

/// Every receiver satisfied?
ValidationReport validate_encoder(const FieldMatrix& g, const PicodInstance& inst);

/// Vertical concatenation; blocks must agree on q, fold, and column count.
FieldMatrix stack(std::span<const FieldMatrix> blocks);

/// codeword = G * x for a flat message vector of m*k residues.
std::vector<int> encode(const FieldMatrix& g, std::span<const int> messages);

struct DecodeResult {
    int vertex = -1;             ///< which message was decoded
    std::vector<int> symbols;    ///< its k residues
};

/// Receiver-side decoding: strips the side-information contribution from the
/// codeword and applies the verdict's decode matrix. Only entries of
/// `side_info` at vertices outside the request-set are read.
DecodeResult decode(const ReceiverVerdict& verdict, const FieldMatrix& g,
                    const PicodInstance& inst, std::span<const int> codeword,
                    std::span<const int> side_info);

}  // namespace picod
