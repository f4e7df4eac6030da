#include "picod/gf.hpp"

#include <stdexcept>

namespace picod::gf {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

int next_prime_at_least(int n) {
    int q = n < 2 ? 2 : n;
    while (!is_prime(q)) ++q;
    return q;
}

int pow(int a, long long e, int q) {
    long long base = a % q, r = 1;
    while (e > 0) {
        if (e & 1) r = r * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return static_cast<int>(r);
}

int inv(int a, int q) {
    a %= q;
    if (a == 0) throw std::invalid_argument("zero has no inverse");
    return pow(a, q - 2, q);
}

Matrix Matrix::identity(int q, int n) {
    Matrix m(q, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

int rank(Matrix m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        const int s = inv(m.at(r, c), m.q);
        for (int j = c; j < m.cols; ++j) m.at(r, j) = mul(m.at(r, j), s, m.q);
        for (int i = r + 1; i < m.rows; ++i) {
            const int f = m.at(i, c);
            if (f == 0) continue;
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = sub(m.at(i, j), mul(f, m.at(r, j), m.q), m.q);
        }
        ++r;
    }
    return r;
}

std::optional<Matrix> solve_left(const Matrix& A, const Matrix& T) {
    if (A.cols != T.cols || A.q != T.q)
        throw std::invalid_argument("solve_left: shape or field mismatch");
    const int q = A.q;
    // Solve A^T Z = T^T by elimination on [A^T | T^T]; then W = Z^T.
    const int rows = A.cols, lhs = A.rows, rhs = T.rows;
    Matrix aug(q, rows, lhs + rhs);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < lhs; ++j) aug.at(i, j) = A.at(j, i);
        for (int j = 0; j < rhs; ++j) aug.at(i, lhs + j) = T.at(j, i);
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < lhs && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (aug.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < aug.cols; ++j) std::swap(aug.at(piv, j), aug.at(r, j));
        const int s = inv(aug.at(r, c), q);
        for (int j = c; j < aug.cols; ++j) aug.at(r, j) = mul(aug.at(r, j), s, q);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const int f = aug.at(i, c);
            if (f == 0) continue;
            for (int j = c; j < aug.cols; ++j)
                aug.at(i, j) = sub(aug.at(i, j), mul(f, aug.at(r, j), q), q);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        for (int j = 0; j < rhs; ++j)
            if (aug.at(i, lhs + j) != 0) return std::nullopt;  // inconsistent
    Matrix w(q, rhs, lhs);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < rhs; ++j) w.at(j, pivot_col[static_cast<size_t>(i)]) = aug.at(i, lhs + j);
    return w;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows || a.q != b.q)
        throw std::invalid_argument("matmul: shape or field mismatch");
    Matrix out(a.q, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const int f = a.at(i, k);
            if (f == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                out.at(i, j) = add(out.at(i, j), mul(f, b.at(k, j), a.q), a.q);
        }
    return out;
}

std::vector<int> matvec(const Matrix& a, std::span<const int> x) {
    if (static_cast<int>(x.size()) != a.cols)
        throw std::invalid_argument("matvec: length mismatch");
    std::vector<int> y(static_cast<size_t>(a.rows), 0);
    for (int i = 0; i < a.rows; ++i) {
        long long acc = 0;
        for (int j = 0; j < a.cols; ++j)
            acc += static_cast<long long>(a.at(i, j)) * (x[static_cast<size_t>(j)] % a.q);
        y[static_cast<size_t>(i)] = static_cast<int>((acc % a.q + a.q) % a.q);
    }
    return y;
}

Matrix vstack(std::span<const Matrix> blocks) {
    if (blocks.empty()) throw std::invalid_argument("vstack: no blocks");
    int rows = 0;
    for (const auto& b : blocks) {
        if (b.cols != blocks.front().cols || b.q != blocks.front().q)
            throw std::invalid_argument("vstack: shape or field mismatch");
        rows += b.rows;
    }
    Matrix out(blocks.front().q, rows, blocks.front().cols);
    int r = 0;
    for (const auto& b : blocks)
        for (int i = 0; i < b.rows; ++i, ++r)
            for (int j = 0; j < b.cols; ++j) out.at(r, j) = b.at(i, j);
    return out;
}

}  // namespace picod::gf
