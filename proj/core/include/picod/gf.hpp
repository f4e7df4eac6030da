#pragma once

#include <optional>
#include <span>
#include <vector>

namespace picod::gf {

bool is_prime(int q);
int next_prime_at_least(int n);

inline int add(int a, int b, int q) { return (a + b) % q; }
inline int sub(int a, int b, int q) { return (a - b % q + q) % q; }
inline int mul(int a, int b, int q) {
    return static_cast<int>(static_cast<long long>(a) * b % q);
}
int pow(int a, long long e, int q);
int inv(int a, int q);  ///< multiplicative inverse; requires a != 0 mod q, q prime

/// Dense matrix of residues mod a prime q, row-major.
struct Matrix {
    int q = 2;
    int rows = 0;
    int cols = 0;
    std::vector<int> a;

    Matrix() = default;
    Matrix(int q_, int rows_, int cols_)
        : q(q_), rows(rows_), cols(cols_), a(static_cast<size_t>(rows_) * cols_, 0) {}

    int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Matrix identity(int q, int n);
    bool operator==(const Matrix&) const = default;
};

/// Exact rank by Gaussian elimination (works on a copy).
int rank(Matrix m);

/// Solves W * A = T for W (T.rows x A.rows). Returns nullopt when the system
/// is inconsistent. Free variables are set to zero.
std::optional<Matrix> solve_left(const Matrix& A, const Matrix& T);

Matrix matmul(const Matrix& a, const Matrix& b);
std::vector<int> matvec(const Matrix& a, std::span<const int> x);

/// Vertical concatenation; all blocks must share q and column count.
Matrix vstack(std::span<const Matrix> blocks);

}  // namespace picod::gf
