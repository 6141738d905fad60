#include "htd/matrix.hpp"

#include <cmath>

namespace htd {

void matmul_acc(const Matrix& a, const Matrix& b, Matrix& c) {
    const int n = a.rows, k = a.cols, m = b.cols;
    const double* pa = a.data.data();
    const double* pb = b.data.data();
    double* pc = c.data.data();
    for (int i = 0; i < n; ++i) {
        const double* arow = pa + static_cast<std::size_t>(i) * k;
        double* crow = pc + static_cast<std::size_t>(i) * m;
        for (int t = 0; t < k; ++t) {
            const double av = arow[t];
            if (av == 0.0) continue;
            const double* brow = pb + static_cast<std::size_t>(t) * m;
            for (int j = 0; j < m; ++j) crow[j] += av * brow[j];
        }
    }
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows, b.cols);
    matmul_acc(a, b, c);
    return c;
}

void matmul_at_b_acc(const Matrix& a, const Matrix& b, Matrix& c) {
    // c (a.cols x b.cols) += a^T * b
    const int n = a.rows, k = a.cols, m = b.cols;
    const double* pa = a.data.data();
    const double* pb = b.data.data();
    double* pc = c.data.data();
    for (int i = 0; i < n; ++i) {
        const double* arow = pa + static_cast<std::size_t>(i) * k;
        const double* brow = pb + static_cast<std::size_t>(i) * m;
        for (int t = 0; t < k; ++t) {
            const double av = arow[t];
            if (av == 0.0) continue;
            double* crow = pc + static_cast<std::size_t>(t) * m;
            for (int j = 0; j < m; ++j) crow[j] += av * brow[j];
        }
    }
}

void matmul_a_bt_acc(const Matrix& a, const Matrix& b, Matrix& c) {
    // c (a.rows x b.rows) += a * b^T
    const int n = a.rows, k = a.cols, m = b.rows;
    const double* pa = a.data.data();
    const double* pb = b.data.data();
    double* pc = c.data.data();
    for (int i = 0; i < n; ++i) {
        const double* arow = pa + static_cast<std::size_t>(i) * k;
        double* crow = pc + static_cast<std::size_t>(i) * m;
        for (int j = 0; j < m; ++j) {
            const double* brow = pb + static_cast<std::size_t>(j) * k;
            double acc = 0.0;
            for (int t = 0; t < k; ++t) acc += arow[t] * brow[t];
            crow[j] += acc;
        }
    }
}

bool all_finite(const Matrix& m) {
    for (double v : m.data)
        if (!std::isfinite(v)) return false;
    return true;
}

} // namespace htd
