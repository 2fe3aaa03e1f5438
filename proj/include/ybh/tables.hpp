#ifndef YBH_TABLES_HPP
#define YBH_TABLES_HPP

#include <string>
#include <vector>

#include "ybh/chain.hpp"
#include "ybh/snf.hpp"

namespace ybh {

// One published homology value: which biquandle, which degree, which theory.
struct ExpectedCell {
    std::string biquandle;  // builtin spec string
    Theory theory;
    int degree;
    AbGroup group;
};

// The embedded reference data the golden runs diff against. Table 1 covers
// the cyclic biquandles, table 2 the Alexander biquandles. Blank cells are
// absent, not zero.
const std::vector<ExpectedCell>& expected_table(int which);

// Distinct biquandle specs of a table, in row order.
std::vector<std::string> table_biquandles(int which);

}  // namespace ybh

#endif
