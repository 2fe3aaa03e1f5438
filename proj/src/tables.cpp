#include "ybh/tables.hpp"

#include <algorithm>

namespace ybh {

namespace {

ExpectedCell cell(const char* spec, Theory t, int degree, long long free_rank,
                  std::vector<long long> torsion = {}) {
    ExpectedCell c;
    c.biquandle = spec;
    c.theory = t;
    c.degree = degree;
    c.group.free_rank = free_rank;
    for (long long d : torsion) c.group.torsion.emplace_back(d);
    return c;
}

std::vector<ExpectedCell> build_table1() {
    using enum Theory;
    std::vector<ExpectedCell> t;
    // cyclic 3, degrees 1..4
    t.push_back(cell("cyclic 3", YB, 1, 1, {3}));
    t.push_back(cell("cyclic 3", YB, 2, 3));
    t.push_back(cell("cyclic 3", YB, 3, 9, {3}));
    t.push_back(cell("cyclic 3", YB, 4, 27));
    t.push_back(cell("cyclic 3", DEG, 1, 0));
    t.push_back(cell("cyclic 3", DEG, 2, 1));
    t.push_back(cell("cyclic 3", DEG, 3, 5));
    t.push_back(cell("cyclic 3", DEG, 4, 19));
    t.push_back(cell("cyclic 3", NYB, 1, 1, {3}));
    t.push_back(cell("cyclic 3", NYB, 2, 2));
    t.push_back(cell("cyclic 3", NYB, 3, 4, {3}));
    t.push_back(cell("cyclic 3", NYB, 4, 8));
    // cyclic 5, degrees 1..4
    t.push_back(cell("cyclic 5", YB, 1, 1, {5}));
    t.push_back(cell("cyclic 5", YB, 2, 5));
    t.push_back(cell("cyclic 5", YB, 3, 25, {5}));
    t.push_back(cell("cyclic 5", YB, 4, 125));
    t.push_back(cell("cyclic 5", DEG, 1, 0));
    t.push_back(cell("cyclic 5", DEG, 2, 1));
    t.push_back(cell("cyclic 5", DEG, 3, 9));
    t.push_back(cell("cyclic 5", DEG, 4, 61));
    t.push_back(cell("cyclic 5", NYB, 1, 1, {5}));
    t.push_back(cell("cyclic 5", NYB, 2, 4));
    t.push_back(cell("cyclic 5", NYB, 3, 16, {5}));
    t.push_back(cell("cyclic 5", NYB, 4, 64));
    // cyclic 8, degrees 1..3 (degree 4 is not tabulated)
    t.push_back(cell("cyclic 8", YB, 1, 1, {8}));
    t.push_back(cell("cyclic 8", YB, 2, 8));
    t.push_back(cell("cyclic 8", YB, 3, 64, {8}));
    t.push_back(cell("cyclic 8", DEG, 1, 0));
    t.push_back(cell("cyclic 8", DEG, 2, 1));
    t.push_back(cell("cyclic 8", DEG, 3, 15));
    t.push_back(cell("cyclic 8", NYB, 1, 1, {8}));
    t.push_back(cell("cyclic 8", NYB, 2, 7));
    t.push_back(cell("cyclic 8", NYB, 3, 49, {8}));
    return t;
}

std::vector<ExpectedCell> build_table2() {
    using enum Theory;
    std::vector<ExpectedCell> t;
    // Z_{8;3,5}, degrees 1..3
    t.push_back(cell("alexander 8 3 5", YB, 1, 2));
    t.push_back(cell("alexander 8 3 5", YB, 2, 4, {2, 2}));
    t.push_back(cell("alexander 8 3 5", YB, 3, 8, {2, 2, 2, 2, 8, 8}));
    t.push_back(cell("alexander 8 3 5", DEG, 1, 0));
    t.push_back(cell("alexander 8 3 5", DEG, 2, 2));
    t.push_back(cell("alexander 8 3 5", DEG, 3, 6, {2, 2}));
    t.push_back(cell("alexander 8 3 5", NYB, 1, 2));
    t.push_back(cell("alexander 8 3 5", NYB, 2, 2, {2, 2}));
    t.push_back(cell("alexander 8 3 5", NYB, 3, 2, {2, 2, 8, 8}));
    // Z_{9;4,4}, degrees 1..2
    t.push_back(cell("alexander 9 4 4", YB, 1, 3, {3}));
    t.push_back(cell("alexander 9 4 4", YB, 2, 9, {3, 3, 3}));
    t.push_back(cell("alexander 9 4 4", DEG, 1, 0));
    t.push_back(cell("alexander 9 4 4", DEG, 2, 3));
    t.push_back(cell("alexander 9 4 4", NYB, 1, 3, {3}));
    t.push_back(cell("alexander 9 4 4", NYB, 2, 6, {3, 3, 3}));
    // Z_{8;5,5}, degrees 1..3
    t.push_back(cell("alexander 8 5 5", YB, 1, 4, {2}));
    t.push_back(cell("alexander 8 5 5", YB, 2, 24, {2, 2, 2}));
    t.push_back(cell("alexander 8 5 5", YB, 3, 160,
                     {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 4}));
    t.push_back(cell("alexander 8 5 5", DEG, 1, 0));
    t.push_back(cell("alexander 8 5 5", DEG, 2, 4));
    t.push_back(cell("alexander 8 5 5", DEG, 3, 44, {2, 2, 2, 2}));
    t.push_back(cell("alexander 8 5 5", NYB, 1, 4, {2}));
    t.push_back(cell("alexander 8 5 5", NYB, 2, 20, {2, 2, 2}));
    t.push_back(cell("alexander 8 5 5", NYB, 3, 116, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 4}));
    // Z_{16;13,13}, degrees 1..2
    t.push_back(cell("alexander 16 13 13", YB, 1, 4, {4}));
    t.push_back(cell("alexander 16 13 13", YB, 2, 24, {2, 2, 4, 4, 4}));
    t.push_back(cell("alexander 16 13 13", DEG, 1, 0));
    t.push_back(cell("alexander 16 13 13", DEG, 2, 4));
    t.push_back(cell("alexander 16 13 13", NYB, 1, 4, {4}));
    t.push_back(cell("alexander 16 13 13", NYB, 2, 20, {2, 2, 4, 4, 4}));
    return t;
}

}  // namespace

const std::vector<ExpectedCell>& expected_table(int which) {
    static const std::vector<ExpectedCell> t1 = build_table1();
    static const std::vector<ExpectedCell> t2 = build_table2();
    if (which == 1) return t1;
    if (which == 2) return t2;
    throw ParseError("no such table: " + std::to_string(which));
}

std::vector<std::string> table_biquandles(int which) {
    std::vector<std::string> out;
    for (const auto& c : expected_table(which))
        if (std::find(out.begin(), out.end(), c.biquandle) == out.end()) out.push_back(c.biquandle);
    return out;
}

}  // namespace ybh
