#include "ybh/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ybh {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

void unite(std::vector<int>& parent, int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

}  // namespace

int Diagram::components() const {
    std::vector<int> parent(semi_arcs);
    std::iota(parent.begin(), parent.end(), 0);
    // the strand entering on the left leaves on the right and vice versa
    for (const auto& x : crossings) {
        unite(parent, x.in_l, x.out_r);
        unite(parent, x.in_r, x.out_l);
    }
    std::set<int> roots;
    for (int i = 0; i < semi_arcs; ++i) roots.insert(find_root(parent, i));
    return static_cast<int>(roots.size());
}

void validate_diagram(const Diagram& d) {
    if (d.semi_arcs < 0) throw ParseError("negative semi-arc count");
    std::vector<int> ins(d.semi_arcs, 0), outs(d.semi_arcs, 0);
    for (size_t k = 0; k < d.crossings.size(); ++k) {
        const auto& x = d.crossings[k];
        if (x.sign != 1 && x.sign != -1)
            throw BadSign("crossing " + std::to_string(k) + " has sign " + std::to_string(x.sign));
        for (int id : {x.in_l, x.in_r, x.out_l, x.out_r}) {
            if (id < 0 || id >= d.semi_arcs)
                throw DanglingSemiArc("crossing " + std::to_string(k) + " references semi-arc " +
                                      std::to_string(id) + " of " + std::to_string(d.semi_arcs));
        }
        ++ins[x.in_l];
        ++ins[x.in_r];
        ++outs[x.out_l];
        ++outs[x.out_r];
    }
    for (int id = 0; id < d.semi_arcs; ++id) {
        if (ins[id] > 1 || outs[id] > 1)
            throw DuplicateSlot("semi-arc " + std::to_string(id) + " occupies multiple " +
                                (ins[id] > 1 ? "input" : "output") + " slots");
        if (ins[id] != outs[id])
            throw DanglingSemiArc("semi-arc " + std::to_string(id) + " has " + std::to_string(ins[id]) +
                                  " input and " + std::to_string(outs[id]) + " output occurrences");
    }
}

Diagram parse_diagram(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("diagram is not valid JSON: ") + e.what());
    }
    Diagram d;
    try {
        d.semi_arcs = j.at("semi_arcs").get<int>();
        for (const auto& c : j.at("crossings")) {
            Crossing x;
            x.sign = c.at("sign").get<int>();
            x.in_l = c.at("in_l").get<int>();
            x.in_r = c.at("in_r").get<int>();
            x.out_l = c.at("out_l").get<int>();
            x.out_r = c.at("out_r").get<int>();
            d.crossings.push_back(x);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("diagram fields malformed: ") + e.what());
    }
    validate_diagram(d);
    return d;
}

std::string diagram_to_json(const Diagram& d) {
    std::ostringstream os;
    os << "{\n  \"semi_arcs\": " << d.semi_arcs << ",\n  \"crossings\": [";
    for (size_t k = 0; k < d.crossings.size(); ++k) {
        const auto& x = d.crossings[k];
        os << (k ? "," : "") << "\n    {\"sign\": " << x.sign << ", \"in_l\": " << x.in_l
           << ", \"in_r\": " << x.in_r << ", \"out_l\": " << x.out_l << ", \"out_r\": " << x.out_r
           << "}";
    }
    os << (d.crossings.empty() ? "]" : "\n  ]") << "\n}\n";
    return os.str();
}

Diagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 1) throw ParseError("braid needs at least one strand");
    std::vector<int> arc(strands);
    std::iota(arc.begin(), arc.end(), 0);
    int next_id = strands;
    std::vector<Crossing> raw;
    for (int letter : word) {
        int g = letter > 0 ? letter : -letter;
        if (g < 1 || g >= strands)
            throw ParseError("braid generator " + std::to_string(g) + " needs strands 1.." +
                             std::to_string(strands - 1) + "+1");
        Crossing x;
        x.sign = letter > 0 ? 1 : -1;
        x.in_l = arc[g - 1];
        x.in_r = arc[g];
        x.out_l = next_id++;
        x.out_r = next_id++;
        arc[g - 1] = x.out_l;
        arc[g] = x.out_r;
        raw.push_back(x);
    }
    // closure identifies the final arc at each position with the initial one;
    // surviving intermediate ids are compacted in numeric order
    std::vector<int> rename(next_id, -1);
    for (int p = 0; p < strands; ++p) rename[arc[p]] = p;
    for (int i = 0; i < strands; ++i)
        if (rename[i] == -1) rename[i] = i;
    int compact = strands;
    for (int i = strands; i < next_id; ++i)
        if (rename[i] == -1) rename[i] = compact++;
    Diagram d;
    d.semi_arcs = compact;
    for (const auto& x : raw)
        d.crossings.push_back({x.sign, rename[x.in_l], rename[x.in_r], rename[x.out_l], rename[x.out_r]});
    validate_diagram(d);
    return d;
}

// ---------------------------------------------------------------------------
// Coloring search: constraint propagation to a fixpoint, branching on the
// smallest uncolored semi-arc. Free choices are limited to one seed per
// "level" of the diagram, so the cost is N^(braid width) in practice.
// ---------------------------------------------------------------------------

namespace {

struct ColoringSearch {
    const Diagram& d;
    const FiniteYB& X;
    Table left_inv;   // left_inv[a][c] = b with R1(a,b) = c
    Table right_inv;  // right_inv[b][d] = a with R2(a,b) = d
    std::vector<Coloring> found;

    ColoringSearch(const Diagram& dia, const FiniteYB& x) : d(dia), X(x) {
        const int N = X.size;
        left_inv.assign(N, std::vector<int>(N, -1));
        right_inv.assign(N, std::vector<int>(N, -1));
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                left_inv[a][X.r1[a][b]] = b;
                right_inv[b][X.r2[a][b]] = a;
            }
    }

    static bool assign(std::vector<int>& color, int id, int v, bool& changed) {
        if (color[id] == -1) {
            color[id] = v;
            changed = true;
            return true;
        }
        return color[id] == v;
    }

    bool propagate(std::vector<int>& color) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& x : d.crossings) {
                // orient the constraint as R(a,b) = (c,d)
                int ia, ib, ic, id;
                if (x.sign > 0) {
                    ia = x.in_l; ib = x.in_r; ic = x.out_l; id = x.out_r;
                } else {
                    ia = x.out_l; ib = x.out_r; ic = x.in_l; id = x.in_r;
                }
                int a = color[ia], b = color[ib], c = color[ic], dd = color[id];
                if (a != -1 && b != -1) {
                    if (!assign(color, ic, X.r1[a][b], changed)) return false;
                    if (!assign(color, id, X.r2[a][b], changed)) return false;
                } else if (c != -1 && dd != -1) {
                    auto [pa, pb] = X.apply_inverse(c, dd);
                    if (!assign(color, ia, pa, changed)) return false;
                    if (!assign(color, ib, pb, changed)) return false;
                } else if (a != -1 && c != -1) {
                    int pb = left_inv[a][c];
                    if (!assign(color, ib, pb, changed)) return false;
                } else if (b != -1 && dd != -1) {
                    int pa = right_inv[b][dd];
                    if (!assign(color, ia, pa, changed)) return false;
                }
            }
        }
        return true;
    }

    void search(std::vector<int> color) {
        if (!propagate(color)) return;
        int free_arc = -1;
        for (int i = 0; i < d.semi_arcs; ++i)
            if (color[i] == -1) {
                free_arc = i;
                break;
            }
        if (free_arc == -1) {
            found.push_back(std::move(color));
            return;
        }
        for (int v = 0; v < X.size; ++v) {
            std::vector<int> branch = color;
            branch[free_arc] = v;
            search(std::move(branch));
        }
    }
};

}  // namespace

std::vector<Coloring> colorings(const Diagram& d, const FiniteYB& X) {
    if (!X.r_inv || !X.bar) throw NotABiquandle("coloring requires a biquandle (r_inv and bar)");
    auto rep = verify_axioms(X);
    if (!rep.all_ok()) throw NotABiquandle("coloring requires a biquandle");
    validate_diagram(d);
    ColoringSearch s(d, X);
    s.search(std::vector<int>(d.semi_arcs, -1));
    return std::move(s.found);
}

std::vector<Int> represented_cycle(const Diagram& d, const Coloring& col, const FiniteYB& X,
                                   const BoundaryMatrix& d2_nyb) {
    if (static_cast<int>(col.size()) != d.semi_arcs) throw ShapeMismatch("coloring length mismatch");
    std::map<Tuple, int> col_index;
    for (size_t j = 0; j < d2_nyb.col_basis.size(); ++j)
        col_index[d2_nyb.col_basis[j]] = static_cast<int>(j);

    std::vector<Int> z(d2_nyb.col_basis.size(), Int(0));
    for (const auto& x : d.crossings) {
        // the pair whose R-image is the other pair: in-colors at a positive
        // crossing, out-colors at a negative one
        int a, b;
        if (x.sign > 0) {
            a = col[x.in_l];
            b = col[x.in_r];
        } else {
            a = col[x.out_l];
            b = col[x.out_r];
        }
        auto it = col_index.find(Tuple{a, b});
        if (it == col_index.end()) continue;  // degenerate pair: zero in the quotient
        z[it->second] += x.sign;
    }

    for (const auto& v : d2_nyb.matrix.apply(z))
        if (v != 0) throw NotACycle("represented chain is not a cycle (convention bug)");
    return z;
}

InvariantValue homological_invariant(const Diagram& d, const FiniteYB& X,
                                     const HomologyPresentation& h2, const BoundaryMatrix& d2_nyb) {
    auto cols = colorings(d, X);
    std::map<ClassCoords, long long> counts;
    for (const auto& c : cols) ++counts[h2.class_of(represented_cycle(d, c, X, d2_nyb))];
    InvariantValue out;
    out.coloring_count = static_cast<long long>(cols.size());
    for (auto& [coords, mult] : counts) out.classes.emplace_back(coords, mult);
    return out;
}

InvariantValue homological_invariant(const Diagram& d, const FiniteYB& X) {
    auto d2 = boundary_matrix(X, Theory::NYB, 2);
    auto d3 = boundary_matrix(X, Theory::NYB, 3);
    HomologyPresentation h2(d2.matrix, d3.matrix);
    return homological_invariant(d, X, h2, d2);
}

std::string InvariantValue::to_string() const {
    std::ostringstream os;
    os << "colorings: " << coloring_count << "\n";
    for (const auto& [coords, mult] : classes) os << "  " << mult << " * " << coords.to_string() << "\n";
    return os.str();
}

std::string envgroup_presentation(const FiniteYB& X) {
    const int N = X.size;
    std::ostringstream os;
    os << "< ";
    for (int i = 0; i < N; ++i) {
        if (i) os << ", ";
        os << "g" << i;
    }
    os << " |";
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> seen;
    bool first = true;
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            int c = X.r1[a][b], dd = X.r2[a][b];
            if (c == a && dd == b) continue;  // tautology
            auto lhs = std::make_pair(a, b), rhs = std::make_pair(c, dd);
            auto key = lhs < rhs ? std::make_pair(lhs, rhs) : std::make_pair(rhs, lhs);
            if (!seen.insert(key).second) continue;
            os << (first ? " " : ", ") << "g" << a << "*g" << b << " = g" << c << "*g" << dd;
            first = false;
        }
    }
    os << " >";
    return os.str();
}

}  // namespace ybh
