#include "ybh/snf.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

namespace ybh {

namespace {

// ---------------------------------------------------------------------------
// Scalar types for the elimination kernels. The sparse kernel runs on checked
// 64-bit first and is re-run on exact big integers if anything overflows.
// ---------------------------------------------------------------------------

struct Overflow {};

struct CheckedI64 {
    long long v = 0;
    CheckedI64() = default;
    CheckedI64(long long x) : v(x) {}

    friend CheckedI64 operator+(CheckedI64 a, CheckedI64 b) {
        long long r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
        return r;
    }
    friend CheckedI64 operator-(CheckedI64 a, CheckedI64 b) {
        long long r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
        return r;
    }
    friend CheckedI64 operator*(CheckedI64 a, CheckedI64 b) {
        long long r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
        return r;
    }
    friend CheckedI64 operator/(CheckedI64 a, CheckedI64 b) {
        if (b.v == -1 && a.v == std::numeric_limits<long long>::min()) throw Overflow{};
        return a.v / b.v;
    }
    friend CheckedI64 operator-(CheckedI64 a) {
        if (a.v == std::numeric_limits<long long>::min()) throw Overflow{};
        return -a.v;
    }
    friend bool operator==(CheckedI64 a, CheckedI64 b) { return a.v == b.v; }
    friend bool operator!=(CheckedI64 a, CheckedI64 b) { return a.v != b.v; }
};

CheckedI64 abs_val(CheckedI64 a) { return a.v < 0 ? -a : a; }
Int abs_val(const Int& a) { return a < 0 ? Int(-a) : a; }

bool less_abs(CheckedI64 a, CheckedI64 b) {
    unsigned long long ua = a.v < 0 ? 0ULL - static_cast<unsigned long long>(a.v)
                                    : static_cast<unsigned long long>(a.v);
    unsigned long long ub = b.v < 0 ? 0ULL - static_cast<unsigned long long>(b.v)
                                    : static_cast<unsigned long long>(b.v);
    return ua < ub;
}
bool less_abs(const Int& a, const Int& b) { return abs_val(a) < abs_val(b); }

bool is_unit(CheckedI64 a) { return a.v == 1 || a.v == -1; }
bool is_unit(const Int& a) { return a == 1 || a == -1; }

Int to_int(CheckedI64 a) { return Int(a.v); }
const Int& to_int(const Int& a) { return a; }

CheckedI64 from_int(const Int& x, CheckedI64*) {
    if (x < std::numeric_limits<long long>::min() || x > std::numeric_limits<long long>::max())
        throw Overflow{};
    return x.convert_to<long long>();
}
Int from_int(const Int& x, Int*) { return x; }

// ---------------------------------------------------------------------------
// Sparse diagonalization (no transforms). Strategy: eliminate on +-1 pivots
// chosen by Markowitz cost as long as any exist; below a 256x256 active block
// finish densely; otherwise take a general smallest-magnitude pivot and grind
// it down with Euclidean row/column reductions. Two-sided integer row/column
// operations preserve the invariant-factor multiset, so the collected
// diagonal values only need the gcd/lcm renormalization at the end.
// ---------------------------------------------------------------------------

constexpr int kDenseFinishThreshold = 256;

std::vector<Int> dense_diagonalize(std::vector<std::vector<Int>> a);

template <class T>
class SparseElim {
   public:
    explicit SparseElim(const IntMatrix& A)
        : nrows_(A.rows()), ncols_(A.cols()), rows_(A.rows()), cols_(A.cols()),
          row_done_(A.rows(), 0), col_done_(A.cols(), 0) {
        for (const auto& [rc, v] : A.entries()) {
            T tv = from_int(v, static_cast<T*>(nullptr));
            rows_[rc.first].emplace(rc.second, tv);
            cols_[rc.second].insert(rc.first);
            ++nnz_;
            if (is_unit(tv)) push_candidate(rc.first, rc.second);
        }
    }

    std::vector<Int> run() {
        std::vector<Int> diag;
        while (nnz_ > 0) {
            auto unit = pop_unit();
            if (unit) {
                eliminate_unit(unit->first, unit->second);
                diag.push_back(1);
                continue;
            }
            if (active_fits_dense()) {
                for (auto& d : dense_finish()) diag.push_back(std::move(d));
                break;
            }
            diag.push_back(general_pivot());
        }
        return diag;
    }

   private:
    void push_candidate(int r, int c) { heap_.push({cost(r, c), r, c}); }

    long long cost(int r, int c) const {
        return static_cast<long long>(rows_[r].size() - 1) * static_cast<long long>(cols_[c].size() - 1);
    }

    std::optional<std::pair<int, int>> pop_unit() {
        while (!heap_.empty()) {
            auto [k, r, c] = heap_.top();
            heap_.pop();
            if (row_done_[r] || col_done_[c]) continue;
            auto it = rows_[r].find(c);
            if (it == rows_[r].end() || !is_unit(it->second)) continue;
            long long now = cost(r, c);
            if (now != k) {
                heap_.push({now, r, c});
                continue;
            }
            return std::make_pair(r, c);
        }
        return std::nullopt;
    }

    void set_entry(int r, int c, T val) {
        auto it = rows_[r].find(c);
        if (val == T(0)) {
            if (it != rows_[r].end()) {
                rows_[r].erase(it);
                cols_[c].erase(r);
                --nnz_;
            }
            return;
        }
        if (it == rows_[r].end()) {
            rows_[r].emplace(c, val);
            cols_[c].insert(r);
            ++nnz_;
        } else {
            it->second = val;
        }
        if (is_unit(val)) push_candidate(r, c);
    }

    // row_dst -= q * row_src
    void row_update(int dst, int src, T q) {
        for (const auto& [j, v] : rows_[src]) {
            T nv;
            auto it = rows_[dst].find(j);
            if (it == rows_[dst].end())
                nv = T(0) - q * v;
            else
                nv = it->second - q * v;
            set_entry(dst, j, nv);
        }
    }

    // col_dst -= q * col_src  (iterates rows of the source column)
    void col_update(int dst, int src, T q) {
        std::vector<int> src_rows(cols_[src].begin(), cols_[src].end());
        for (int r : src_rows) {
            T v = rows_[r].at(src);
            T nv;
            auto it = rows_[r].find(dst);
            if (it == rows_[r].end())
                nv = T(0) - q * v;
            else
                nv = it->second - q * v;
            set_entry(r, dst, nv);
        }
    }

    void retire(int r, int c) {
        std::vector<int> cs;
        cs.reserve(rows_[r].size());
        for (const auto& [j, v] : rows_[r]) cs.push_back(j);
        for (int j : cs) set_entry(r, j, T(0));
        std::vector<int> rs(cols_[c].begin(), cols_[c].end());
        for (int i : rs) set_entry(i, c, T(0));
        row_done_[r] = 1;
        col_done_[c] = 1;
    }

    // Pivot is +-1: clear its column with row operations; the remaining row
    // entries are then removable by column operations that touch nothing else.
    void eliminate_unit(int r, int c) {
        T p = rows_[r].at(c);
        std::vector<int> col_rows(cols_[c].begin(), cols_[c].end());
        for (int i : col_rows) {
            if (i == r) continue;
            T q = rows_[i].at(c) * p;  // = entry / p since p = +-1
            row_update(i, r, q);
        }
        retire(r, c);
    }

    bool active_fits_dense() {
        int ar = 0, ac = 0;
        for (int r = 0; r < nrows_; ++r)
            if (!row_done_[r] && !rows_[r].empty()) ++ar;
        for (int c = 0; c < ncols_; ++c)
            if (!col_done_[c] && !cols_[c].empty()) ++ac;
        return ar <= kDenseFinishThreshold && ac <= kDenseFinishThreshold;
    }

    std::vector<Int> dense_finish() {
        std::vector<int> rmap, cmap;
        for (int r = 0; r < nrows_; ++r)
            if (!row_done_[r] && !rows_[r].empty()) rmap.push_back(r);
        for (int c = 0; c < ncols_; ++c)
            if (!col_done_[c] && !cols_[c].empty()) cmap.push_back(c);
        std::vector<int> cidx(ncols_, -1);
        for (size_t k = 0; k < cmap.size(); ++k) cidx[cmap[k]] = static_cast<int>(k);
        std::vector<std::vector<Int>> a(rmap.size(), std::vector<Int>(cmap.size(), Int(0)));
        for (size_t i = 0; i < rmap.size(); ++i)
            for (const auto& [j, v] : rows_[rmap[i]]) a[i][cidx[j]] = to_int(v);
        return dense_diagonalize(std::move(a));
    }

    // No +-1 entry anywhere and the active block is still large: take the
    // smallest-magnitude entry and run Euclidean reductions until its row and
    // column are clear. Each restart strictly shrinks the pivot.
    Int general_pivot() {
        int pr = -1, pc = -1;
        for (int r = 0; r < nrows_; ++r) {
            if (row_done_[r]) continue;
            for (const auto& [j, v] : rows_[r]) {
                if (pr < 0 || less_abs(v, rows_[pr].at(pc))) {
                    pr = r;
                    pc = j;
                }
            }
        }
        while (true) {
            T p = rows_[pr].at(pc);
            bool dirty = false;
            std::vector<int> col_rows(cols_[pc].begin(), cols_[pc].end());
            for (int i : col_rows) {
                if (i == pr) continue;
                T q = rows_[i].at(pc) / p;
                if (q != T(0)) row_update(i, pr, q);
                auto it = rows_[i].find(pc);
                if (it != rows_[i].end() && less_abs(it->second, p)) {
                    pr = i;
                    dirty = true;
                    break;
                }
            }
            if (dirty) continue;
            // column now holds only the pivot; clear the pivot row
            std::vector<int> row_cols;
            for (const auto& [j, v] : rows_[pr])
                if (j != pc) row_cols.push_back(j);
            for (int j : row_cols) {
                T q = rows_[pr].at(j) / p;
                if (q != T(0)) col_update(j, pc, q);
                auto it = rows_[pr].find(j);
                if (it != rows_[pr].end() && less_abs(it->second, p)) {
                    pc = j;
                    dirty = true;
                    break;
                }
            }
            if (dirty) continue;
            Int d = abs_val(to_int(p));
            retire(pr, pc);
            return d;
        }
    }

    int nrows_, ncols_;
    std::vector<std::map<int, T>> rows_;
    std::vector<std::set<int>> cols_;
    std::vector<char> row_done_, col_done_;
    size_t nnz_ = 0;
    std::priority_queue<std::tuple<long long, int, int>, std::vector<std::tuple<long long, int, int>>,
                        std::greater<>>
        heap_;
};

// Renormalize an arbitrary diagonal multiset into the divisibility chain.
void normalize_chain(std::vector<Int>& d) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < d.size(); ++i) {
            for (size_t j = i + 1; j < d.size(); ++j) {
                if (d[j] % d[i] != 0) {
                    Int g = boost::multiprecision::gcd(d[i], d[j]);
                    Int l = (d[i] / g) * d[j];
                    d[i] = g;
                    d[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::sort(d.begin(), d.end());
}

std::vector<Int> sparse_diagonal(const IntMatrix& A) {
    std::vector<Int> diag;
    try {
        SparseElim<CheckedI64> e(A);
        diag = e.run();
    } catch (const Overflow&) {
        SparseElim<Int> e(A);
        diag = e.run();
    }
    normalize_chain(diag);
    return diag;
}

// ---------------------------------------------------------------------------
// Dense kernel. Tracks U, V, V^{-1} when asked; always emits the canonical
// chain directly (smallest-pivot selection plus the classic divisibility
// repair step).
// ---------------------------------------------------------------------------

class DenseSmith {
   public:
    DenseSmith(const IntMatrix& A, bool want_u, bool want_v, bool want_vinv)
        : m_(A.rows()), n_(A.cols()), a_(A.rows(), std::vector<Int>(A.cols(), Int(0))),
          want_u_(want_u), want_v_(want_v), want_vinv_(want_vinv) {
        for (const auto& [rc, v] : A.entries()) a_[rc.first][rc.second] = v;
        if (want_u_) u_ = dense_identity(m_);
        if (want_v_) v_ = dense_identity(n_);
        if (want_vinv_) vinv_ = dense_identity(n_);
    }

    void run() {
        int k = 0;
        const int kmax = std::min(m_, n_);
        while (k < kmax) {
            int pi = -1, pj = -1;
            for (int i = k; i < m_; ++i)
                for (int j = k; j < n_; ++j)
                    if (a_[i][j] != 0 && (pi < 0 || abs_val(a_[i][j]) < abs_val(a_[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;
            row_swap(k, pi);
            col_swap(k, pj);
            bool settled = false;
            while (!settled) {
                settled = true;
                for (int i = k + 1; i < m_; ++i) {
                    if (a_[i][k] == 0) continue;
                    Int q = a_[i][k] / a_[k][k];
                    if (q != 0) row_addmul(i, k, q);
                    if (a_[i][k] != 0) {
                        row_swap(k, i);  // smaller remainder becomes the pivot
                        settled = false;
                        break;
                    }
                }
                if (!settled) continue;
                for (int j = k + 1; j < n_; ++j) {
                    if (a_[k][j] == 0) continue;
                    Int q = a_[k][j] / a_[k][k];
                    if (q != 0) col_addmul(j, k, q);
                    if (a_[k][j] != 0) {
                        col_swap(k, j);
                        settled = false;
                        break;
                    }
                }
                if (!settled) continue;
                // pivot row/col clean; force divisibility of the rest
                for (int i = k + 1; i < m_ && settled; ++i)
                    for (int j = k + 1; j < n_; ++j)
                        if (a_[i][j] % a_[k][k] != 0) {
                            row_addmul(k, i, Int(-1));  // row_k += row_i
                            settled = false;
                            break;
                        }
            }
            if (a_[k][k] < 0) row_negate(k);
            ++k;
        }
        rank_ = k;
    }

    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        for (int i = 0; i < rank_; ++i) d.push_back(a_[i][i]);
        return d;
    }

    IntMatrix export_u() const { return to_matrix(u_, m_, m_); }
    IntMatrix export_v() const { return to_matrix(v_, n_, n_); }
    IntMatrix export_vinv() const { return to_matrix(vinv_, n_, n_); }

   private:
    static std::vector<std::vector<Int>> dense_identity(int n) {
        std::vector<std::vector<Int>> id(n, std::vector<Int>(n, Int(0)));
        for (int i = 0; i < n; ++i) id[i][i] = 1;
        return id;
    }

    static IntMatrix to_matrix(const std::vector<std::vector<Int>>& d, int r, int c) {
        IntMatrix out(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (d[i][j] != 0) out.set(i, j, d[i][j]);
        return out;
    }

    void row_swap(int i, int k) {
        if (i == k) return;
        std::swap(a_[i], a_[k]);
        if (want_u_) std::swap(u_[i], u_[k]);
    }
    void row_negate(int i) {
        for (auto& x : a_[i]) x = -x;
        if (want_u_)
            for (auto& x : u_[i]) x = -x;
    }
    // row_i -= q * row_k
    void row_addmul(int i, int k, const Int& q) {
        for (int j = 0; j < n_; ++j)
            if (a_[k][j] != 0) a_[i][j] -= q * a_[k][j];
        if (want_u_)
            for (int j = 0; j < m_; ++j)
                if (u_[k][j] != 0) u_[i][j] -= q * u_[k][j];
    }
    void col_swap(int j, int k) {
        if (j == k) return;
        for (int i = 0; i < m_; ++i) std::swap(a_[i][j], a_[i][k]);
        if (want_v_)
            for (int i = 0; i < n_; ++i) std::swap(v_[i][j], v_[i][k]);
        if (want_vinv_) std::swap(vinv_[j], vinv_[k]);  // inverse takes the row swap
    }
    // col_j -= q * col_k; V^{-1} takes the inverse op: row_k += q * row_j
    void col_addmul(int j, int k, const Int& q) {
        for (int i = 0; i < m_; ++i)
            if (a_[i][k] != 0) a_[i][j] -= q * a_[i][k];
        if (want_v_)
            for (int i = 0; i < n_; ++i)
                if (v_[i][k] != 0) v_[i][j] -= q * v_[i][k];
        if (want_vinv_)
            for (int c = 0; c < n_; ++c)
                if (vinv_[j][c] != 0) vinv_[k][c] += q * vinv_[j][c];
    }

    int m_, n_;
    std::vector<std::vector<Int>> a_;
    bool want_u_, want_v_, want_vinv_;
    std::vector<std::vector<Int>> u_, v_, vinv_;
    int rank_ = 0;
};

std::vector<Int> dense_diagonalize(std::vector<std::vector<Int>> a) {
    const int m = static_cast<int>(a.size());
    const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
    IntMatrix tmp(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i][j] != 0) tmp.set(i, j, a[i][j]);
    DenseSmith ds(tmp, false, false, false);
    ds.run();
    return ds.diagonal();
}

}  // namespace

IntMatrix SnfResult::D() const {
    IntMatrix d(rows, cols);
    for (size_t i = 0; i < diagonal.size(); ++i) d.set(static_cast<int>(i), static_cast<int>(i), diagonal[i]);
    return d;
}

SnfResult snf(const IntMatrix& A, const SnfOptions& opt) {
    SnfResult res;
    res.rows = A.rows();
    res.cols = A.cols();
    const bool transforms = opt.want_u || opt.want_v || opt.want_v_inv;
    if (transforms || opt.force_dense) {
        DenseSmith ds(A, opt.want_u, opt.want_v, opt.want_v_inv);
        ds.run();
        res.diagonal = ds.diagonal();
        if (opt.want_u) res.U = ds.export_u();
        if (opt.want_v) res.V = ds.export_v();
        if (opt.want_v_inv) res.V_inv = ds.export_vinv();
    } else {
        res.diagonal = sparse_diagonal(A);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Abelian group bookkeeping
// ---------------------------------------------------------------------------

namespace {

std::vector<Int> prime_power_parts(const Int& value) {
    std::vector<Int> parts;
    Int rest = value;
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            Int pk = 1;
            while (rest % p == 0) {
                pk *= p;
                rest /= p;
            }
            parts.push_back(pk);
        }
    }
    if (rest > 1) parts.push_back(rest);
    return parts;
}

}  // namespace

std::vector<Int> AbGroup::elementary_divisors() const {
    std::vector<Int> out;
    for (const auto& d : torsion) {
        auto parts = prime_power_parts(d);
        out.insert(out.end(), parts.begin(), parts.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string AbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " + ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank > 1) {
        sep();
        os << "Z^" << free_rank;
    }
    for (size_t i = 0; i < torsion.size();) {
        size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        sep();
        os << "Z_" << torsion[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

AbGroup make_abgroup(long long free_rank, std::vector<Int> torsion_orders) {
    // Regroup the prime-power content into a divisibility chain.
    std::map<Int, std::vector<int>> by_prime;  // prime -> exponents
    for (const auto& d : torsion_orders) {
        Int rest = d;
        for (Int p = 2; p * p <= rest; ++p) {
            if (rest % p == 0) {
                int e = 0;
                while (rest % p == 0) {
                    ++e;
                    rest /= p;
                }
                by_prime[p].push_back(e);
            }
        }
        if (rest > 1) by_prime[rest].push_back(1);
    }
    size_t slots = 0;
    for (auto& [p, exps] : by_prime) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        slots = std::max(slots, exps.size());
    }
    std::vector<Int> chain(slots, Int(1));  // chain[0] = largest factor
    for (auto& [p, exps] : by_prime) {
        for (size_t i = 0; i < exps.size(); ++i) {
            Int pk = 1;
            for (int e = 0; e < exps[i]; ++e) pk *= p;
            chain[i] *= pk;
        }
    }
    std::reverse(chain.begin(), chain.end());
    AbGroup g;
    g.free_rank = free_rank;
    for (auto& d : chain)
        if (d > 1) g.torsion.push_back(std::move(d));
    return g;
}

AbGroup direct_sum(const AbGroup& a, const AbGroup& b) {
    std::vector<Int> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return make_abgroup(a.free_rank + b.free_rank, std::move(orders));
}

bool isomorphic(const AbGroup& a, const AbGroup& b) {
    return a.free_rank == b.free_rank && a.elementary_divisors() == b.elementary_divisors();
}

// ---------------------------------------------------------------------------
// Homology of one degree from the two boundary maps around it
// ---------------------------------------------------------------------------

namespace {

void check_complex_pair(const IntMatrix& boundary_out, const IntMatrix& boundary_in) {
    if (boundary_out.cols() != boundary_in.rows())
        throw ShapeMismatch("boundary matrices are not composable");
    if (!boundary_out.multiply(boundary_in).is_zero())
        throw NotAComplex("boundary composition is nonzero");
}

}  // namespace

AbGroup homology_from_ranks(int chain_rank, int rank_out, const std::vector<Int>& in_diagonal) {
    AbGroup g;
    g.free_rank = chain_rank - rank_out - static_cast<long long>(in_diagonal.size());
    for (const auto& d : in_diagonal)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

AbGroup homology(const IntMatrix& boundary_out, const IntMatrix& boundary_in) {
    check_complex_pair(boundary_out, boundary_in);
    auto s_out = snf(boundary_out);
    auto s_in = snf(boundary_in);
    return homology_from_ranks(boundary_out.cols(), s_out.rank(), s_in.diagonal);
}

namespace {

bool is_prime_ll(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

long long rank_mod_p(const IntMatrix& A, long long p) {
    const int m = A.rows(), n = A.cols();
    std::vector<std::vector<long long>> a(m, std::vector<long long>(n, 0));
    for (const auto& [rc, v] : A.entries()) {
        Int r = v % p;
        if (r < 0) r += p;
        a[rc.first][rc.second] = r.convert_to<long long>();
    }
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        for (int i = rank; i < m; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        // scale pivot row to 1 via Fermat inverse
        long long inv = 1, base = a[rank][col] % p, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = (__int128)inv * base % p;
            base = (__int128)base * base % p;
            e >>= 1;
        }
        for (int j = col; j < n; ++j) a[rank][j] = (__int128)a[rank][j] * inv % p;
        for (int i = 0; i < m; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            long long f = a[i][col];
            for (int j = col; j < n; ++j) {
                a[i][j] = (a[i][j] - (__int128)f * a[rank][j]) % p;
                if (a[i][j] < 0) a[i][j] += p;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

long long homology_mod_p(const IntMatrix& boundary_out, const IntMatrix& boundary_in, long long p) {
    if (!is_prime_ll(p)) throw NotPrime("coefficient modulus must be prime");
    check_complex_pair(boundary_out, boundary_in);
    long long nullity = boundary_out.cols() - rank_mod_p(boundary_out, p);
    return nullity - rank_mod_p(boundary_in, p);
}

// ---------------------------------------------------------------------------
// HomologyPresentation
// ---------------------------------------------------------------------------

bool ClassCoords::is_zero() const {
    for (const auto& f : free)
        if (f != 0) return false;
    for (const auto& [r, d] : torsion)
        if (r != 0) return false;
    return true;
}

bool ClassCoords::operator<(const ClassCoords& other) const {
    if (free != other.free) return free < other.free;
    return torsion < other.torsion;
}

std::string ClassCoords::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& f : free) {
        if (!first) os << ",";
        first = false;
        os << f;
    }
    for (const auto& [r, d] : torsion) {
        if (!first) os << ",";
        first = false;
        os << r << " mod " << d;
    }
    os << "]";
    return os.str();
}

HomologyPresentation::HomologyPresentation(const IntMatrix& boundary_out, const IntMatrix& boundary_in) {
    if (boundary_out.cols() != boundary_in.rows())
        throw ShapeMismatch("boundary matrices are not composable");
    chain_dim_ = boundary_out.cols();

    SnfOptions opt;
    opt.want_v_inv = true;
    auto s_out = snf(boundary_out, opt);
    const int r = s_out.rank();
    cycle_rank_ = chain_dim_ - r;
    kernel_coords_ = std::move(*s_out.V_inv);

    // Incoming boundary expressed on the kernel lattice. A cycle has zero
    // coordinates in the first r slots, so rows < r must vanish here; a
    // nonzero entry means the pair is not a chain complex.
    IntMatrix w = kernel_coords_.multiply(boundary_in);
    IntMatrix relations(cycle_rank_, boundary_in.cols());
    for (const auto& [rc, v] : w.entries()) {
        if (rc.first < r) throw NotAComplex("incoming boundary image is not contained in the cycles");
        relations.set(rc.first - r, rc.second, v);
    }

    SnfOptions opt2;
    opt2.want_u = true;
    auto s_rel = snf(relations, opt2);
    boundary_rank_ = s_rel.rank();
    canon_ = std::move(*s_rel.U);
    factors_ = s_rel.diagonal;
    group_ = homology_from_ranks(chain_dim_, r, factors_);
}

ClassCoords HomologyPresentation::class_of(const std::vector<Int>& cycle) const {
    if (static_cast<int>(cycle.size()) != chain_dim_)
        throw ShapeMismatch("cycle vector length does not match the chain rank");
    std::vector<Int> c = kernel_coords_.apply(cycle);
    const int r = chain_dim_ - cycle_rank_;
    for (int i = 0; i < r; ++i)
        if (c[i] != 0) throw NotACycle("vector is not in the kernel of the outgoing boundary");
    std::vector<Int> y(c.begin() + r, c.end());
    std::vector<Int> t = canon_.apply(y);
    ClassCoords out;
    for (int i = 0; i < boundary_rank_; ++i) {
        if (factors_[i] > 1) {
            Int res = t[i] % factors_[i];
            if (res < 0) res += factors_[i];
            out.torsion.emplace_back(res, factors_[i]);
        }
    }
    for (int i = boundary_rank_; i < cycle_rank_; ++i) out.free.push_back(t[i]);
    return out;
}

ClassCoords HomologyPresentation::add(const ClassCoords& a, const ClassCoords& b) const {
    if (a.free.size() != b.free.size() || a.torsion.size() != b.torsion.size())
        throw ShapeMismatch("class coordinates from different presentations");
    ClassCoords out;
    out.free.reserve(a.free.size());
    for (size_t i = 0; i < a.free.size(); ++i) out.free.push_back(a.free[i] + b.free[i]);
    for (size_t i = 0; i < a.torsion.size(); ++i) {
        const Int& d = a.torsion[i].second;
        Int res = (a.torsion[i].first + b.torsion[i].first) % d;
        out.torsion.emplace_back(res, d);
    }
    return out;
}

HomologyPresentation presentation(const IntMatrix& boundary_out, const IntMatrix& boundary_in) {
    return HomologyPresentation(boundary_out, boundary_in);
}

}  // namespace ybh
