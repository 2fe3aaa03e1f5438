#include "ybh/chain.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace ybh {

const char* theory_name(Theory t) {
    switch (t) {
        case Theory::YB: return "YB";
        case Theory::DEG: return "D";
        case Theory::NYB: return "NYB";
    }
    return "?";
}

Theory theory_from_name(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(c));
    if (s == "yb") return Theory::YB;
    if (s == "d" || s == "deg") return Theory::DEG;
    if (s == "nyb") return Theory::NYB;
    throw ParseError("unknown theory '" + name + "' (expected yb, deg, or nyb)");
}

Tuple face_left(const FiniteYB& X, int i, const Tuple& w) {
    const int n = static_cast<int>(w.size());
    if (i < 1 || i > n) throw IndexOutOfRange("face index out of range");
    if (i == 1) return Tuple(w.begin() + 1, w.end());
    // m[j] = value of the moving strand after crossing strand j+1..i-1
    std::vector<int> m(static_cast<size_t>(i) + 1);
    m[i] = w[i - 1];
    for (int j = i - 1; j >= 1; --j) m[j] = X.r1[w[j - 1]][m[j + 1]];
    Tuple out;
    out.reserve(n - 1);
    for (int j = 1; j <= i - 1; ++j) out.push_back(X.r2[w[j - 1]][m[j + 1]]);
    for (int j = i + 1; j <= n; ++j) out.push_back(w[j - 1]);
    return out;
}

Tuple face_right(const FiniteYB& X, int i, const Tuple& w) {
    const int n = static_cast<int>(w.size());
    if (i < 1 || i > n) throw IndexOutOfRange("face index out of range");
    if (i == n) return Tuple(w.begin(), w.end() - 1);
    Tuple out;
    out.reserve(n - 1);
    for (int j = 1; j <= i - 1; ++j) out.push_back(w[j - 1]);
    int moving = w[i - 1];
    for (int j = i + 1; j <= n; ++j) {
        out.push_back(X.r1[moving][w[j - 1]]);
        moving = X.r2[moving][w[j - 1]];
    }
    return out;
}

bool is_degenerate(const FiniteYB& X, const Tuple& w) {
    if (!X.bar) throw BarUnavailable("degenerate tuples need the fixed-pair map (biquandle only)");
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] == (*X.bar)[w[i]]) return true;
    return false;
}

std::vector<Tuple> enumerate_basis(const FiniteYB& X, Theory theory, int degree) {
    if (degree < 0) throw IndexOutOfRange("negative degree");
    if (theory != Theory::YB && !X.bar)
        throw BarUnavailable("degenerate/normalized bases need the fixed-pair map (biquandle only)");
    std::vector<Tuple> out;
    if (degree == 0) {
        if (theory != Theory::DEG) out.push_back(Tuple{});
        return out;
    }
    Tuple w(degree, 0);
    const int N = X.size;
    while (true) {
        bool take = true;
        if (theory == Theory::DEG) take = is_degenerate(X, w);
        else if (theory == Theory::NYB) take = !is_degenerate(X, w);
        if (take) out.push_back(w);
        int pos = degree - 1;
        while (pos >= 0 && w[pos] == N - 1) w[pos--] = 0;
        if (pos < 0) break;
        ++w[pos];
    }
    return out;
}

namespace {

void require_yb(const FiniteYB& X) {
    auto rep = verify_axioms(X);
    if (!rep.ybe_holds) {
        std::ostringstream os;
        os << "the Yang-Baxter equation fails";
        if (rep.ybe_witness)
            os << " at (" << (*rep.ybe_witness)[0] << "," << (*rep.ybe_witness)[1] << ","
               << (*rep.ybe_witness)[2] << ")";
        throw NotYangBaxter(os.str());
    }
}

}  // namespace

BoundaryMatrix boundary_matrix(const FiniteYB& X, Theory theory, int n) {
    if (n < 1) throw IndexOutOfRange("boundary degree must be >= 1");
    require_yb(X);
    if (theory != Theory::YB && !X.bar)
        throw BarUnavailable("degenerate/normalized boundaries need a biquandle");

    BoundaryMatrix bm;
    bm.degree = n;
    bm.row_basis = enumerate_basis(X, theory, n - 1);
    bm.col_basis = enumerate_basis(X, theory, n);
    bm.matrix = IntMatrix(static_cast<int>(bm.row_basis.size()), static_cast<int>(bm.col_basis.size()));
    if (n == 1) return bm;  // both faces hit the unique 0-cell, so the signed sum is zero

    std::map<Tuple, int> row_index;
    for (size_t r = 0; r < bm.row_basis.size(); ++r) row_index[bm.row_basis[r]] = static_cast<int>(r);

    for (size_t c = 0; c < bm.col_basis.size(); ++c) {
        const Tuple& w = bm.col_basis[c];
        std::map<Tuple, long long> column;
        for (int i = 1; i <= n; ++i) {
            const int sign = (i % 2 == 1) ? 1 : -1;
            column[face_left(X, i, w)] += sign;
            column[face_right(X, i, w)] -= sign;
        }
        for (const auto& [f, coeff] : column) {
            if (coeff == 0) continue;
            auto it = row_index.find(f);
            if (it != row_index.end()) {
                bm.matrix.set(it->second, static_cast<int>(c), Int(coeff));
                continue;
            }
            // NYB: a degenerate image projects to zero. DEG: a surviving
            // non-degenerate image would contradict the subcomplex property.
            if (theory == Theory::DEG)
                throw Error("degenerate subcomplex is not closed under the boundary");
        }
    }
    return bm;
}

ComplexReport verify_complex(const FiniteYB& X, Theory theory, int max_degree) {
    ComplexReport rep;

    auto tuple_str = [](const Tuple& w) {
        std::string s = "(";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(w[i]);
        }
        return s + ")";
    };

    // (a) boundary squared
    for (int n = 2; n <= max_degree; ++n) {
        ComplexCheck c;
        c.name = std::string("dd=0 (") + theory_name(theory) + ", degree " + std::to_string(n) + ")";
        auto lo = boundary_matrix(X, theory, n - 1);
        auto hi = boundary_matrix(X, theory, n);
        auto prod = lo.matrix.multiply(hi.matrix);
        if (!prod.is_zero()) {
            c.ok = false;
            auto& [rc, v] = *prod.entries().begin();
            c.witness = "nonzero composite entry at (" + std::to_string(rc.first) + "," +
                        std::to_string(rc.second) + ")";
        }
        rep.checks.push_back(std::move(c));
    }

    // (b) pre-cubical identities, pointwise on the full complex
    if (theory == Theory::YB) {
        for (int n = 2; n <= max_degree; ++n) {
            ComplexCheck c;
            c.name = "pre-cubical identities (degree " + std::to_string(n) + ")";
            auto tuples = enumerate_basis(X, Theory::YB, n);
            for (const auto& w : tuples) {
                for (int j = 2; j <= n && c.ok; ++j) {
                    for (int i = 1; i < j && c.ok; ++i) {
                        for (int e = 0; e < 2 && c.ok; ++e) {
                            for (int d = 0; d < 2; ++d) {
                                Tuple inner = d ? face_right(X, j, w) : face_left(X, j, w);
                                Tuple lhs = e ? face_right(X, i, inner) : face_left(X, i, inner);
                                Tuple first = e ? face_right(X, i, w) : face_left(X, i, w);
                                Tuple rhs = d ? face_right(X, j - 1, first) : face_left(X, j - 1, first);
                                if (lhs != rhs) {
                                    c.ok = false;
                                    c.witness = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                                " on " + tuple_str(w);
                                    break;
                                }
                            }
                        }
                    }
                }
                if (!c.ok) break;
            }
            rep.checks.push_back(std::move(c));
        }
    }

    // (c) closure of the degenerate subcomplex: the full boundary of every
    // degenerate tuple is supported on degenerate tuples
    if (X.bar) {
        for (int n = 2; n <= max_degree; ++n) {
            ComplexCheck c;
            c.name = "boundary closure of degenerate chains (degree " + std::to_string(n) + ")";
            auto full = boundary_matrix(X, Theory::YB, n);
            std::map<Tuple, int> col_index;
            for (size_t j = 0; j < full.col_basis.size(); ++j) col_index[full.col_basis[j]] = static_cast<int>(j);
            std::vector<char> col_degenerate(full.col_basis.size(), 0);
            for (size_t j = 0; j < full.col_basis.size(); ++j)
                col_degenerate[j] = is_degenerate(X, full.col_basis[j]);
            std::vector<char> row_degenerate(full.row_basis.size(), 0);
            for (size_t r = 0; r < full.row_basis.size(); ++r)
                row_degenerate[r] = is_degenerate(X, full.row_basis[r]);
            for (const auto& [rc, v] : full.matrix.entries()) {
                if (col_degenerate[rc.second] && !row_degenerate[rc.first]) {
                    c.ok = false;
                    c.witness = "boundary of " + tuple_str(full.col_basis[rc.second]) +
                                " hits non-degenerate " + tuple_str(full.row_basis[rc.first]);
                    break;
                }
            }
            rep.checks.push_back(std::move(c));
        }
    }

    return rep;
}

std::string format_boundary_matrix(const BoundaryMatrix& bm) {
    std::ostringstream os;
    os << bm.degree << " " << bm.matrix.rows() << " " << bm.matrix.cols() << "\n";
    for (const auto& [rc, v] : bm.matrix.entries())
        os << rc.first << " " << rc.second << " " << v << "\n";
    return os.str();
}

std::string format_basis(const std::vector<Tuple>& basis) {
    std::ostringstream os;
    for (const auto& w : basis) {
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << ",";
            os << w[i];
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace ybh
