#ifndef YBH_BIQUANDLE_IO_HPP
#define YBH_BIQUANDLE_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "ybh/finite_yb.hpp"

namespace ybh {

// On-disk biquandle: the core tables plus optional display names.
// Round trip load(save(X)) == X is guaranteed for the tables.
struct BiquandleFile {
    FiniteYB yb;
    std::optional<std::vector<std::string>> names;
};

std::string save_biquandle(const BiquandleFile& f);
BiquandleFile load_biquandle_text(const std::string& json_text);
BiquandleFile load_biquandle_path(const std::string& path);

// Builtin spec strings: "cyclic N" or "alexander N S T".
bool looks_like_builtin_spec(const std::string& s);
FiniteYB make_builtin(const std::string& spec);

// Resolve either a builtin spec or a file path.
FiniteYB resolve_biquandle(const std::string& spec_or_path);

}  // namespace ybh

#endif
