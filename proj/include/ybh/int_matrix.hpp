#ifndef YBH_INT_MATRIX_HPP
#define YBH_INT_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <utility>
#include <vector>

#include "ybh/errors.hpp"

namespace ybh {

// Exact integer of unbounded magnitude. All homology-critical arithmetic
// runs on this type or on checked 64-bit with promotion back to it.
using Int = boost::multiprecision::cpp_int;

// Sparse integer matrix with exact entries. Deterministic iteration order
// (row-major over a std::map) so every downstream computation is
// reproducible bit for bit.
class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimension");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const std::map<std::pair<int, int>, Int>& entries() const { return data_; }

    Int get(int r, int c) const {
        check_index(r, c);
        auto it = data_.find({r, c});
        return it == data_.end() ? Int(0) : it->second;
    }

    void set(int r, int c, Int v) {
        check_index(r, c);
        if (v == 0)
            data_.erase({r, c});
        else
            data_[{r, c}] = std::move(v);
    }

    void add(int r, int c, const Int& v) {
        check_index(r, c);
        auto [it, inserted] = data_.try_emplace({r, c}, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) data_.erase(it);
        }
    }

    size_t nnz() const { return data_.size(); }
    bool is_zero() const { return data_.empty(); }

    IntMatrix multiply(const IntMatrix& other) const;
    IntMatrix transpose() const;

    // y = A * x for a dense vector x of length cols().
    std::vector<Int> apply(const std::vector<Int>& x) const;

    // Exact determinant via fraction-free Bareiss elimination (square only).
    Int determinant() const;

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

   private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw IndexOutOfRange("matrix index out of range");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, Int> data_;
};

}  // namespace ybh

#endif
