#include "picod/encoder.hpp"

#include <algorithm>
#include <stdexcept>

#include "picod/localcf.hpp"

namespace picod {

FieldMatrix::FieldMatrix(int q, int fold, int rows, int message_count) : k_(fold) {
    if (!gf::is_prime(q)) throw std::invalid_argument("field modulus must be prime");
    if (fold < 1) throw std::invalid_argument("fold must be >= 1");
    mat_ = gf::Matrix(q, rows, message_count * fold);
}

FieldMatrix::FieldMatrix(gf::Matrix mat, int fold) : mat_(std::move(mat)), k_(fold) {
    if (!gf::is_prime(mat_.q)) throw std::invalid_argument("field modulus must be prime");
    if (fold < 1 || mat_.cols % fold != 0)
        throw std::invalid_argument("column count must be a multiple of the fold");
}

gf::Matrix FieldMatrix::vertex_block(int vertex) const {
    gf::Matrix b(mat_.q, mat_.rows, k_);
    for (int r = 0; r < mat_.rows; ++r)
        for (int j = 0; j < k_; ++j) b.at(r, j) = mat_.at(r, column_index(vertex, j));
    return b;
}

FieldMatrix indicator_matrix(const KFoldColoring& c, int q) {
    FieldMatrix g(q, c.fold(), c.palette_size(), c.vertex_count());
    for (int v = 0; v < c.vertex_count(); ++v)
        for (int j = 0; j < c.fold(); ++j) g.at(c.colors_of(v)[static_cast<size_t>(j)], g.column_index(v, j)) = 1;
    return g;
}

gf::Matrix mds_generator(int length, int dim, int q) {
    if (dim < 1 || dim > length) throw std::invalid_argument("need 1 <= dim <= length");
    if (!gf::is_prime(q)) throw std::invalid_argument("field modulus must be prime");
    if (q < length) throw std::invalid_argument("field too small: need q >= code length");
    if (dim == length) return gf::Matrix::identity(q, dim);  // the whole space
    gf::Matrix g(q, dim, length);
    for (int d = 0; d < length; ++d) {
        g.at(0, d) = 1;  // point^0
        for (int t = 1; t < dim; ++t) g.at(t, d) = gf::mul(g.at(t - 1, d), d % q, q);
    }
    return g;
}

namespace {

FieldMatrix mds_from_subset(const KFoldColoring& c, std::vector<int> dset, int dim, int q) {
    const auto gen = mds_generator(static_cast<int>(dset.size()), dim, q);
    FieldMatrix g(q, c.fold(), dim, c.vertex_count());
    for (int v = 0; v < c.vertex_count(); ++v) {
        for (int j = 0; j < c.fold(); ++j) {
            const int col = c.colors_of(v)[static_cast<size_t>(j)];
            const auto it = std::lower_bound(dset.begin(), dset.end(), col);
            if (it == dset.end() || *it != col) continue;  // zero column
            const int pos = static_cast<int>(it - dset.begin());
            for (int r = 0; r < dim; ++r) g.at(r, g.column_index(v, j)) = gen.at(r, pos);
        }
    }
    return g;
}

std::vector<int> sorted_unique(std::span<const int> values) {
    std::vector<int> out(values.begin(), values.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

FieldMatrix mds_matrix(const KFoldColoring& c, std::span<const int> essential, int q,
                       const PicodInstance& inst) {
    if (c.vertex_count() != inst.message_count())
        throw std::invalid_argument("coloring domain does not match the instance");
    auto dset = sorted_unique(essential);
    if (static_cast<int>(edges_satisfied(c, dset, inst).size()) != inst.receiver_count())
        throw std::invalid_argument("color set is not essential for the coloring");
    const int dim = inst.receiver_count() == 0 ? 1 : delta_of(c, dset, inst);
    return mds_from_subset(c, std::move(dset), dim, q);
}

FieldMatrix mds_cover_block(const KFoldColoring& c, std::span<const int> subset, int q,
                            const PicodInstance& inst) {
    if (c.vertex_count() != inst.message_count())
        throw std::invalid_argument("coloring domain does not match the instance");
    auto dset = sorted_unique(subset);
    const int dim = delta_of(c, dset, inst);  // throws when nothing is satisfied
    return mds_from_subset(c, std::move(dset), dim, q);
}

ReceiverVerdict satisfies_receiver(const FieldMatrix& g, const PicodInstance& inst, int r) {
    if (g.message_count() != inst.message_count())
        throw std::invalid_argument("encoder width does not match the instance");
    const auto& edge = inst.request_set(r);
    const int k = g.fold(), l = g.rows(), q = g.q();
    ReceiverVerdict verdict;
    verdict.receiver = r;
    for (int d : edge) {
        gf::Matrix own = g.vertex_block(d);
        if (gf::rank(own) != k) continue;
        const int others = static_cast<int>(edge.size()) - 1;
        gf::Matrix rest(q, l, others * k);
        int c = 0;
        for (int i : edge) {
            if (i == d) continue;
            for (int j = 0; j < k; ++j, ++c)
                for (int row = 0; row < l; ++row) rest.at(row, c) = g.at(row, g.column_index(i, j));
        }
        gf::Matrix joint(q, l, (others + 1) * k);
        for (int row = 0; row < l; ++row) {
            for (int j = 0; j < k; ++j) joint.at(row, j) = own.at(row, j);
            for (int j = 0; j < rest.cols; ++j) joint.at(row, k + j) = rest.at(row, j);
        }
        if (gf::rank(joint) != k + gf::rank(rest)) continue;  // spans overlap
        gf::Matrix targets(q, k, joint.cols);
        for (int j = 0; j < k; ++j) targets.at(j, j) = 1;
        auto w = gf::solve_left(joint, targets);
        if (!w) continue;  // cannot happen once the rank test passed
        verdict.satisfied = true;
        verdict.witness = d;
        verdict.decode = std::move(*w);
        return verdict;
    }
    return verdict;
}

ValidationReport validate_encoder(const FieldMatrix& g, const PicodInstance& inst) {
    ValidationReport report;
    report.valid = true;
    report.verdicts.reserve(static_cast<size_t>(inst.receiver_count()));
    for (int r = 0; r < inst.receiver_count(); ++r) {
        report.verdicts.push_back(satisfies_receiver(g, inst, r));
        if (!report.verdicts.back().satisfied) {
            report.valid = false;
            report.failing.push_back(r);
        }
    }
    return report;
}

FieldMatrix stack(std::span<const FieldMatrix> blocks) {
    if (blocks.empty()) throw std::invalid_argument("stack: no blocks");
    std::vector<gf::Matrix> mats;
    mats.reserve(blocks.size());
    for (const auto& b : blocks) {
        if (b.fold() != blocks.front().fold())
            throw std::invalid_argument("stack: fold mismatch");
        mats.push_back(b.plain());
    }
    return FieldMatrix(gf::vstack(mats), blocks.front().fold());
}

std::vector<int> encode(const FieldMatrix& g, std::span<const int> messages) {
    return gf::matvec(g.plain(), messages);
}

DecodeResult decode(const ReceiverVerdict& verdict, const FieldMatrix& g,
                    const PicodInstance& inst, std::span<const int> codeword,
                    std::span<const int> side_info) {
    if (!verdict.satisfied) throw std::invalid_argument("receiver is not satisfied by this encoder");
    if (static_cast<int>(codeword.size()) != g.rows())
        throw std::invalid_argument("codeword length mismatch");
    if (static_cast<int>(side_info.size()) != g.cols())
        throw std::invalid_argument("side information must be a full m*k vector");
    const int q = g.q(), k = g.fold();
    const auto& edge = inst.request_set(verdict.receiver);
    std::vector<char> requested(static_cast<size_t>(inst.message_count()), 0);
    for (int v : edge) requested[static_cast<size_t>(v)] = 1;

    // y' = codeword - sum over side-information columns
    std::vector<int> reduced(codeword.size());
    for (size_t i = 0; i < codeword.size(); ++i) reduced[i] = ((codeword[i] % q) + q) % q;
    for (int i = 0; i < inst.message_count(); ++i) {
        if (requested[static_cast<size_t>(i)]) continue;
        for (int j = 0; j < k; ++j) {
            const int x = ((side_info[static_cast<size_t>(g.column_index(i, j))] % q) + q) % q;
            if (x == 0) continue;
            for (int row = 0; row < g.rows(); ++row)
                reduced[static_cast<size_t>(row)] =
                    gf::sub(reduced[static_cast<size_t>(row)], gf::mul(g.at(row, g.column_index(i, j)), x, q), q);
        }
    }

    // The decode matrix was solved against [own | rest] columns of the edge;
    // its action on y' = sum of edge columns * x picks out the witness block.
    DecodeResult out;
    out.vertex = verdict.witness;
    out.symbols = gf::matvec(verdict.decode, reduced);
    return out;
}

}  // namespace picod
