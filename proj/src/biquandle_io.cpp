#include "ybh/biquandle_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ybh {

std::string save_biquandle(const BiquandleFile& f) {
    std::ostringstream os;
    auto table = [&](const Table& t) {
        os << "[";
        for (size_t i = 0; i < t.size(); ++i) {
            os << (i ? ",\n         " : "");
            os << nlohmann::json(t[i]).dump();
        }
        os << "]";
    };
    os << "{\n  \"size\": " << f.yb.size << ",\n";
    os << "  \"r1\": ";
    table(f.yb.r1);
    os << ",\n  \"r2\": ";
    table(f.yb.r2);
    if (f.names) os << ",\n  \"names\": " << nlohmann::json(*f.names).dump();
    os << "\n}\n";
    return os.str();
}

BiquandleFile load_biquandle_text(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("biquandle file is not valid JSON: ") + e.what());
    }
    int size;
    Table r1, r2;
    std::optional<std::vector<std::string>> names;
    try {
        size = j.at("size").get<int>();
        r1 = j.at("r1").get<Table>();
        r2 = j.at("r2").get<Table>();
        if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("biquandle fields malformed: ") + e.what());
    }
    if (static_cast<int>(r1.size()) != size)
        throw ShapeMismatch("declared size does not match the table dimension");
    if (names && static_cast<int>(names->size()) != size)
        throw ShapeMismatch("names list length does not match the carrier size");
    BiquandleFile f;
    f.yb = from_tables(r1, r2);
    f.names = std::move(names);
    return f;
}

BiquandleFile load_biquandle_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open biquandle file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_biquandle_text(buf.str());
}

bool looks_like_builtin_spec(const std::string& s) {
    std::istringstream is(s);
    std::string head;
    is >> head;
    return head == "cyclic" || head == "alexander";
}

FiniteYB make_builtin(const std::string& spec) {
    std::istringstream is(spec);
    std::string head;
    is >> head;
    if (head == "cyclic") {
        long long n;
        if (!(is >> n) || n < 1) throw ParseError("usage: cyclic N (N >= 1)");
        return make_cyclic(static_cast<int>(n));
    }
    if (head == "alexander") {
        long long n, s, t;
        if (!(is >> n >> s >> t) || n < 1) throw ParseError("usage: alexander N S T (N >= 1)");
        return make_alexander(static_cast<int>(n), s, t);
    }
    throw ParseError("unknown builtin '" + head + "' (expected cyclic or alexander)");
}

FiniteYB resolve_biquandle(const std::string& spec_or_path) {
    if (looks_like_builtin_spec(spec_or_path)) return make_builtin(spec_or_path);
    return load_biquandle_path(spec_or_path).yb;
}

}  // namespace ybh
