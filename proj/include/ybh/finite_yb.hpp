#ifndef YBH_FINITE_YB_HPP
#define YBH_FINITE_YB_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybh/errors.hpp"

namespace ybh {

using Table = std::vector<std::vector<int>>;
using PairTable = std::vector<std::vector<std::pair<int, int>>>;

// A finite set-theoretic map R(a,b) = (R1(a,b), R2(a,b)) on the carrier
// {0,...,size-1}, stored as dense lookup tables. r_inv is present iff R is a
// bijection on pairs; bar is present iff every element a has exactly one
// partner b with R(a,b) = (a,b). Both are computed once at construction.
// Instances are immutable after construction.
struct FiniteYB {
    int size = 0;
    Table r1;  // r1[a][b] = R1(a,b)
    Table r2;  // r2[a][b] = R2(a,b)
    std::optional<PairTable> r_inv;       // r_inv[c][d] = (a,b) with R(a,b)=(c,d)
    std::optional<std::vector<int>> bar;  // bar[a] = unique b with R(a,b)=(a,b)

    std::pair<int, int> apply(int a, int b) const { return {r1[a][b], r2[a][b]}; }

    std::pair<int, int> apply_inverse(int c, int d) const {
        if (!r_inv) throw NotBijective("R is not bijective on pairs");
        return (*r_inv)[c][d];
    }

    int bar_of(int a) const {
        if (!bar) throw BarUnavailable("fixed-pair map is unavailable: not a biquandle");
        return (*bar)[a];
    }

    bool operator==(const FiniteYB& other) const {
        return size == other.size && r1 == other.r1 && r2 == other.r2;
    }
};

// Result of the exhaustive axiom check. Every false flag carries a witness.
struct AxiomReport {
    bool ybe_holds = false;
    std::optional<std::array<int, 3>> ybe_witness;

    bool r_bijective = false;
    std::optional<std::pair<int, int>> bijectivity_witness;  // colliding image pair

    bool left_invertible = false;
    std::optional<int> left_witness;  // a for which b -> R1(a,b) is not bijective

    bool right_invertible = false;
    std::optional<int> right_witness;  // b for which a -> R2(a,b) is not bijective

    bool biquandle = false;
    std::optional<int> fixed_pair_witness;  // element with 0 or >=2 fixed partners
    bool biquandle_dual = false;            // for every b, unique a with R(a,b)=(a,b)

    bool birack() const { return ybe_holds && left_invertible && right_invertible; }
    bool all_ok() const { return birack() && r_bijective && biquandle; }
};

// Cyclic biquandle on Z_n: R(i,j) = (j+1 mod n, i-1 mod n).
FiniteYB make_cyclic(int n);

// Alexander biquandle on Z_n: R(a,b) = ((1-s)a + sb, ta + (1-t)b) mod n.
// Requires s, t units mod n and (1-s)(1-t) = 0 mod n.
FiniteYB make_alexander(int n, long long s, long long t);

// General constructor from raw tables. Validates shape and entry range and
// computes r_inv/bar when they exist; no Yang-Baxter axiom is assumed.
FiniteYB from_tables(const Table& r1, const Table& r2);

// Exhaustive verification of the set-theoretic YBE, invertibility conditions
// (1)-(2), and the biquandle condition (3) with its dual.
AxiomReport verify_axioms(const FiniteYB& X);

// Table of the inverse bijection of R on pairs. Throws NotBijective with a
// collision witness when R is not invertible.
PairTable invert_R(const FiniteYB& X);

}  // namespace ybh

#endif
