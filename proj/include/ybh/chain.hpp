#ifndef YBH_CHAIN_HPP
#define YBH_CHAIN_HPP

#include <string>
#include <vector>

#include "ybh/finite_yb.hpp"
#include "ybh/int_matrix.hpp"

namespace ybh {

// A chain-group generator: a word over the carrier. The empty word is the
// single degree-0 generator.
using Tuple = std::vector<int>;

// YB: the full pre-cubical complex. DEG: the subcomplex spanned by tuples
// containing a consecutive fixed pair. NYB: the quotient of YB by DEG.
enum class Theory { YB, DEG, NYB };

const char* theory_name(Theory t);
Theory theory_from_name(const std::string& name);

// Left face map d_i^l for 1 <= i <= n: the i-th strand exits through the left
// edge. The moving value starts as w[i] and crosses each strand j < i as the
// second operand of R; the crossed strand keeps the R2 residue. i = 1 deletes
// the first coordinate without crossings.
Tuple face_left(const FiniteYB& X, int i, const Tuple& w);

// Right face map d_i^r: the i-th strand exits through the right edge,
// crossing strands j > i as the first operand of R; crossed strands keep the
// R1 residue. i = n deletes the last coordinate without crossings.
Tuple face_right(const FiniteYB& X, int i, const Tuple& w);

// True iff some consecutive pair of w is a fixed pair (w[i+1] = bar(w[i])).
// Tuples of degree <= 1 are never degenerate. Requires the biquandle
// condition (bar present).
bool is_degenerate(const FiniteYB& X, const Tuple& w);

// Ordered basis of the degree-n chain group of the chosen theory:
// all tuples in lexicographic order (YB), the degenerate ones (DEG), or the
// non-degenerate ones (NYB).
std::vector<Tuple> enumerate_basis(const FiniteYB& X, Theory theory, int degree);

struct BoundaryMatrix {
    int degree = 0;
    std::vector<Tuple> row_basis;  // degree-1 generators
    std::vector<Tuple> col_basis;  // degree generators
    IntMatrix matrix;
};

// Signed boundary sum((-1)^{i+1} (d_i^l - d_i^r)) over the theory's bases.
// For NYB, face images that are degenerate project to zero. Requires the YBE
// to hold; DEG/NYB additionally require a biquandle.
BoundaryMatrix boundary_matrix(const FiniteYB& X, Theory theory, int n);

struct ComplexCheck {
    std::string name;
    bool ok = true;
    std::string witness;
};

struct ComplexReport {
    std::vector<ComplexCheck> checks;
    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

// (a) boundary-squared vanishes up to max_degree, (b) the pre-cubical
// identities d_i^e d_j^d = d_{j-1}^d d_i^e pointwise (YB only), (c) closure
// of the degenerate subcomplex under the boundary, checked matrix-wise.
ComplexReport verify_complex(const FiniteYB& X, Theory theory, int max_degree);

// Text export used by --dump-matrices: "degree rows cols" header plus one
// "r c v" line per nonzero. Basis sidecars carry one comma-separated tuple
// per line.
std::string format_boundary_matrix(const BoundaryMatrix& bm);
std::string format_basis(const std::vector<Tuple>& basis);

}  // namespace ybh

#endif
