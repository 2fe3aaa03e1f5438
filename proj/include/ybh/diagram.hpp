#ifndef YBH_DIAGRAM_HPP
#define YBH_DIAGRAM_HPP

#include <string>
#include <vector>

#include "ybh/chain.hpp"
#include "ybh/finite_yb.hpp"
#include "ybh/snf.hpp"

namespace ybh {

// One oriented crossing. Both strands run in-to-out; the strand entering on
// the left leaves on the right. A positive crossing transports colors by R,
// a negative one by R^{-1}.
struct Crossing {
    int sign = 1;  // +1 or -1
    int in_l = 0, in_r = 0, out_l = 0, out_r = 0;
};

// An oriented link diagram over semi-arc identifiers 0..semi_arcs-1. Every
// semi-arc occurs exactly once as an input and once as an output, except
// crossing-free loops, which occur in no crossing at all.
struct Diagram {
    int semi_arcs = 0;
    std::vector<Crossing> crossings;

    int components() const;
};

// Validates slot occupancy, ranges, and signs. Throws DanglingSemiArc /
// DuplicateSlot / BadSign with the offending location.
void validate_diagram(const Diagram& d);

// Diagram from JSON text: {"semi_arcs": k, "crossings": [{"sign": 1,
// "in_l": i, "in_r": j, "out_l": p, "out_r": q}, ...]}.
Diagram parse_diagram(const std::string& json_text);
std::string diagram_to_json(const Diagram& d);

// Closure of a braid word on the given number of strands. Letters are
// +g / -g for the positive / negative crossing of strands g and g+1
// (1-based g). Semi-arc ids are compacted deterministically.
Diagram braid_closure(int strands, const std::vector<int>& word);

// A coloring assigns a carrier element to each semi-arc.
using Coloring = std::vector<int>;

// All colorings of d by X, in deterministic order (lexicographic in the
// values of the free semi-arcs). X must be a biquandle.
std::vector<Coloring> colorings(const Diagram& d, const FiniteYB& X);

// The degree-2 chain represented by a colored diagram, as a vector over the
// normalized degree-2 basis: +(in-pair) per positive crossing, -(out-pair)
// per negative crossing, degenerate pairs projected out. d2_nyb must be
// boundary_matrix(X, NYB, 2); the result is checked to be a cycle.
std::vector<Int> represented_cycle(const Diagram& d, const Coloring& col, const FiniteYB& X,
                                   const BoundaryMatrix& d2_nyb);

// State-sum style invariant: the multiset of normalized degree-2 homology
// classes over all colorings, plus the raw coloring count.
struct InvariantValue {
    long long coloring_count = 0;
    std::vector<std::pair<ClassCoords, long long>> classes;  // sorted, with multiplicities

    std::string to_string() const;
    bool operator==(const InvariantValue& other) const = default;
};

InvariantValue homological_invariant(const Diagram& d, const FiniteYB& X);

// Same, evaluated against a caller-supplied presentation (so several
// diagrams can share one canonicalization).
InvariantValue homological_invariant(const Diagram& d, const FiniteYB& X,
                                     const HomologyPresentation& h2, const BoundaryMatrix& d2_nyb);

// Enveloping group <g_0..g_{N-1} | g_a g_b = g_{R1(a,b)} g_{R2(a,b)}> as a
// group-presentation string; tautological and duplicate relations dropped.
std::string envgroup_presentation(const FiniteYB& X);

}  // namespace ybh

#endif
