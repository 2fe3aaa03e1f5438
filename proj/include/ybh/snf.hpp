#ifndef YBH_SNF_HPP
#define YBH_SNF_HPP

#include <optional>
#include <string>
#include <vector>

#include "ybh/int_matrix.hpp"

namespace ybh {

struct SnfOptions {
    bool want_u = false;
    bool want_v = false;
    bool want_v_inv = false;
    // Force the dense kernel even when no transforms are requested
    // (used by tests to cross-check the sparse path).
    bool force_dense = false;
};

// Smith normal form D = U * A * V with d1 | d2 | ... | dk followed by zeros.
// Transform matrices are only populated when requested; the diagonal alone
// is enough for homology groups.
struct SnfResult {
    int rows = 0;
    int cols = 0;
    std::vector<Int> diagonal;  // the nonzero invariant factors, divisibility-sorted
    std::optional<IntMatrix> U;
    std::optional<IntMatrix> V;
    std::optional<IntMatrix> V_inv;

    int rank() const { return static_cast<int>(diagonal.size()); }
    IntMatrix D() const;
};

SnfResult snf(const IntMatrix& A, const SnfOptions& opt = {});

// A finitely generated abelian group in canonical form: free rank plus the
// invariant factors > 1 in a divisibility chain.
struct AbGroup {
    long long free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbGroup& other) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    // Prime-power decomposition of the torsion part, sorted ascending.
    std::vector<Int> elementary_divisors() const;

    // "Z^4 + Z_2^2 + Z_8" style rendering; "0" for the trivial group.
    std::string to_string() const;
};

// Rebuild canonical invariant factors from free rank and an arbitrary
// multiset of torsion orders (each > 1).
AbGroup make_abgroup(long long free_rank, std::vector<Int> torsion_orders);

// Direct sum in canonical form.
AbGroup direct_sum(const AbGroup& a, const AbGroup& b);

// Whether two presentations are isomorphic as abstract groups.
bool isomorphic(const AbGroup& a, const AbGroup& b);

// ker(boundary_out) / im(boundary_in) as an abstract group.
// boundary_out is the map leaving degree n, boundary_in the map entering it.
AbGroup homology(const IntMatrix& boundary_out, const IntMatrix& boundary_in);

// Same group assembled from precomputed pieces (used when SNF results are
// cached across degrees): chain rank of degree n, rank of the outgoing
// boundary, and the SNF diagonal of the incoming boundary.
AbGroup homology_from_ranks(int chain_rank, int rank_out, const std::vector<Int>& in_diagonal);

// Dimension of the same quotient with coefficients in the p-element field.
long long homology_mod_p(const IntMatrix& boundary_out, const IntMatrix& boundary_in, long long p);

// Canonical coordinates of a homology class: an integer vector for the free
// part and residues modulo each invariant factor for the torsion part.
struct ClassCoords {
    std::vector<Int> free;
    std::vector<std::pair<Int, Int>> torsion;  // (residue, modulus)

    bool is_zero() const;
    bool operator==(const ClassCoords& other) const = default;
    bool operator<(const ClassCoords& other) const;
    std::string to_string() const;
};

// Reusable quotient presentation of one homology degree. class_of maps any
// cycle vector to canonical class coordinates; two cycles get the same
// coordinates iff they are homologous.
class HomologyPresentation {
   public:
    HomologyPresentation(const IntMatrix& boundary_out, const IntMatrix& boundary_in);

    ClassCoords class_of(const std::vector<Int>& cycle) const;

    // Componentwise sum of class coordinates (torsion modulo each factor).
    ClassCoords add(const ClassCoords& a, const ClassCoords& b) const;

    const AbGroup& group() const { return group_; }
    int chain_dim() const { return chain_dim_; }

   private:
    int chain_dim_ = 0;        // rank of the ambient chain group
    int cycle_rank_ = 0;       // rank of the kernel lattice
    int boundary_rank_ = 0;    // rank of the incoming boundary
    IntMatrix kernel_coords_;  // V^{-1} of snf(boundary_out): first rows vanish on cycles
    IntMatrix canon_;          // U of snf(boundary_in expressed on the kernel lattice)
    std::vector<Int> factors_; // invariant factors of the relation matrix
    AbGroup group_;
};

HomologyPresentation presentation(const IntMatrix& boundary_out, const IntMatrix& boundary_in);

}  // namespace ybh

#endif
