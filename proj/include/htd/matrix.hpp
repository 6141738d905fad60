#ifndef HTD_MATRIX_HPP
#define HTD_MATRIX_HPP

#include <vector>

namespace htd {

// Dense row-major matrix of doubles. Small and boring on purpose: every
// consumer in this project fits comfortably in memory at desk scale.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

    static Matrix filled(int r, int c, double v) {
        Matrix m(r, c);
        for (double& x : m.data) x = v;
        return m;
    }

    double& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    int size() const { return rows * cols; }
    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
    bool operator==(const Matrix& o) const = default;
};

// C += A * B
void matmul_acc(const Matrix& a, const Matrix& b, Matrix& c);
Matrix matmul(const Matrix& a, const Matrix& b);
// C += A^T * B and C += A * B^T, used by the backward pass
void matmul_at_b_acc(const Matrix& a, const Matrix& b, Matrix& c);
void matmul_a_bt_acc(const Matrix& a, const Matrix& b, Matrix& c);

bool all_finite(const Matrix& m);

} // namespace htd

#endif
