#include "ybh/int_matrix.hpp"

namespace ybh {

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw ShapeMismatch("matrix product dimension mismatch");
    // Row lists of the right factor, so each left entry streams over one row.
    std::vector<std::vector<std::pair<int, const Int*>>> rrows(other.rows_);
    for (const auto& [rc, v] : other.data_) rrows[rc.first].push_back({rc.second, &v});

    IntMatrix out(rows_, other.cols_);
    for (const auto& [rc, v] : data_) {
        for (const auto& [c, w] : rrows[rc.second]) out.add(rc.first, c, v * (*w));
    }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (const auto& [rc, v] : data_) out.set(rc.second, rc.first, v);
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw ShapeMismatch("vector length mismatch");
    std::vector<Int> y(rows_, Int(0));
    for (const auto& [rc, v] : data_) {
        if (x[rc.second] != 0) y[rc.first] += v * x[rc.second];
    }
    return y;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw ShapeMismatch("determinant of non-square matrix");
    const int n = rows_;
    if (n == 0) return 1;

    std::vector<std::vector<Int>> a(n, std::vector<Int>(n, Int(0)));
    for (const auto& [rc, v] : data_) a[rc.first][rc.second] = v;

    // Bareiss: division-free growth control, divisions are exact.
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i) {
                if (a[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace ybh
