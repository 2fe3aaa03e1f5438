// ybh: set-theoretic Yang-Baxter homology workbench.
//
// Exit codes: 0 success / all checks pass, 1 a mathematical check failed,
// 2 input, parse, or resource error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybh/biquandle_io.hpp"
#include "ybh/chain.hpp"
#include "ybh/diagram.hpp"
#include "ybh/snf.hpp"
#include "ybh/tables.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ybh;

constexpr long long kDefaultGuard = 100000;

struct CommonOpts {
    std::string biquandle;
    std::vector<std::string> theories{"yb", "deg", "nyb"};
    int max_degree = 3;
    std::string coeff = "Z";
    std::string format = "text";
    std::string dump_dir;
    long long guard = kDefaultGuard;
    bool skip_verify = false;
};

long long pow_ll(long long base, int exp, long long cap) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > cap / std::max<long long>(base, 1)) return cap + 1;
        v *= base;
    }
    return v;
}

void check_guard(const FiniteYB& X, int degree, long long guard) {
    long long rank = pow_ll(X.size, degree, guard);
    if (rank > guard) {
        std::ostringstream os;
        os << "chain rank " << X.size << "^" << degree << " exceeds the guard of " << guard
           << " columns (raise with --guard)";
        throw ResourceGuard(os.str());
    }
}

ordered_json group_json(const AbGroup& g) {
    ordered_json j;
    j["free_rank"] = g.free_rank;
    auto arr = ordered_json::array();
    for (const auto& d : g.torsion) arr.push_back(d.convert_to<long long>());
    j["torsion"] = arr;
    return j;
}

// Shared boundary/SNF cache so table cells and split checks never recompute.
class HomologyEngine {
   public:
    HomologyEngine(const FiniteYB& X, long long guard) : x_(X), guard_(guard) {}

    const BoundaryMatrix& boundary(Theory t, int n) {
        auto key = std::make_pair(t, n);
        auto it = boundaries_.find(key);
        if (it != boundaries_.end()) return it->second;
        check_guard(x_, n, guard_);
        return boundaries_.emplace(key, boundary_matrix(x_, t, n)).first->second;
    }

    const SnfResult& smith(Theory t, int n) {
        auto key = std::make_pair(t, n);
        auto it = snfs_.find(key);
        if (it != snfs_.end()) return it->second;
        const auto& bm = boundary(t, n);
        return snfs_.emplace(key, snf(bm.matrix)).first->second;
    }

    AbGroup group(Theory t, int n) {
        const auto& out = smith(t, n);
        const auto& in = smith(t, n + 1);
        return homology_from_ranks(boundary(t, n).matrix.cols(), out.rank(), in.diagonal);
    }

    long long group_mod_p(Theory t, int n, long long p) {
        return homology_mod_p(boundary(t, n).matrix, boundary(t, n + 1).matrix, p);
    }

    const FiniteYB& biquandle() const { return x_; }

   private:
    FiniteYB x_;
    long long guard_;
    std::map<std::pair<Theory, int>, BoundaryMatrix> boundaries_;
    std::map<std::pair<Theory, int>, SnfResult> snfs_;
};

std::vector<Theory> parse_theories(const std::vector<std::string>& names) {
    std::vector<Theory> out;
    for (const auto& n : names) {
        std::stringstream ss(n);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (!part.empty()) out.push_back(theory_from_name(part));
        }
    }
    if (out.empty()) throw ParseError("no theory selected");
    return out;
}

void dump_matrices(HomologyEngine& eng, const std::vector<Theory>& theories, int max_degree,
                   const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (Theory t : theories) {
        for (int n = 1; n <= max_degree + 1; ++n) {
            const auto& bm = eng.boundary(t, n);
            std::string base = dir + "/boundary_" + theory_name(t) + "_d" + std::to_string(n);
            std::ofstream(base + ".txt") << format_boundary_matrix(bm);
            std::ofstream(base + ".rows") << format_basis(bm.row_basis);
            std::ofstream(base + ".cols") << format_basis(bm.col_basis);
        }
    }
}

int run_verify_checks(const FiniteYB& X, int max_degree, std::ostream& os) {
    auto rep = verify_axioms(X);
    auto flag = [&](const char* name, bool ok, const std::string& extra) {
        os << (ok ? "[ok]   " : "[FAIL] ") << name;
        if (!extra.empty()) os << "  (" << extra << ")";
        os << "\n";
    };
    std::string w;
    if (rep.ybe_witness)
        w = "witness (" + std::to_string((*rep.ybe_witness)[0]) + "," +
            std::to_string((*rep.ybe_witness)[1]) + "," + std::to_string((*rep.ybe_witness)[2]) + ")";
    flag("yang-baxter equation", rep.ybe_holds, w);
    flag("R bijective on pairs", rep.r_bijective,
         rep.bijectivity_witness ? "collision at image (" + std::to_string(rep.bijectivity_witness->first) +
                                       "," + std::to_string(rep.bijectivity_witness->second) + ")"
                                 : "");
    flag("left-invertible (condition 1)", rep.left_invertible,
         rep.left_witness ? "a = " + std::to_string(*rep.left_witness) : "");
    flag("right-invertible (condition 2)", rep.right_invertible,
         rep.right_witness ? "b = " + std::to_string(*rep.right_witness) : "");
    flag("biquandle (condition 3)", rep.biquandle,
         rep.fixed_pair_witness ? "a = " + std::to_string(*rep.fixed_pair_witness) : "");
    if (rep.biquandle) flag("condition 3 dual", rep.biquandle_dual, "");

    bool ok = rep.all_ok();
    if (!rep.ybe_holds) return 1;  // complex checks are undefined without the YBE

    for (Theory t : {Theory::YB, Theory::DEG, Theory::NYB}) {
        if (t != Theory::YB && !X.bar) continue;
        auto crep = verify_complex(X, t, max_degree);
        for (const auto& c : crep.checks) flag(c.name.c_str(), c.ok, c.witness);
        ok = ok && crep.all_ok();
    }
    return ok ? 0 : 1;
}

int cmd_gen(const std::vector<std::string>& spec_words, const std::string& output) {
    std::string spec;
    for (const auto& w : spec_words) {
        if (!spec.empty()) spec += " ";
        spec += w;
    }
    BiquandleFile f;
    f.yb = make_builtin(spec);
    std::string text = save_biquandle(f);
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw ParseError("cannot write " + output);
        out << text;
    }
    return 0;
}

int cmd_verify(const CommonOpts& opt) {
    FiniteYB X = resolve_biquandle(opt.biquandle);
    return run_verify_checks(X, opt.max_degree, std::cout);
}

int cmd_homology(const CommonOpts& opt) {
    FiniteYB X = resolve_biquandle(opt.biquandle);
    if (!opt.skip_verify) {
        auto rep = verify_axioms(X);
        if (!rep.ybe_holds)
            throw NotYangBaxter("input does not satisfy the Yang-Baxter equation (see 'verify')");
    }
    auto theories = parse_theories(opt.theories);
    HomologyEngine eng(X, opt.guard);

    long long p = 0;
    if (opt.coeff != "Z" && opt.coeff != "z") {
        if (opt.coeff.size() < 2 || (opt.coeff[0] != 'p' && opt.coeff[0] != 'P'))
            throw ParseError("--coeff expects Z or pP (e.g. p3)");
        p = std::stoll(opt.coeff.substr(1));
    }

    ordered_json jout;
    jout["biquandle"] = opt.biquandle;
    jout["coeff"] = p == 0 ? std::string("Z") : "Z/" + std::to_string(p);
    ordered_json results;
    for (Theory t : theories) {
        ordered_json per;
        for (int n = 1; n <= opt.max_degree; ++n) {
            if (p == 0)
                per[std::to_string(n)] = group_json(eng.group(t, n));
            else
                per[std::to_string(n)] = eng.group_mod_p(t, n, p);
        }
        results[theory_name(t)] = per;
    }
    jout["results"] = results;

    if (!opt.dump_dir.empty()) dump_matrices(eng, theories, opt.max_degree, opt.dump_dir);

    if (opt.format == "json") {
        std::cout << jout.dump(2) << "\n";
    } else {
        std::cout << "biquandle: " << opt.biquandle << "\n";
        for (Theory t : theories) {
            for (int n = 1; n <= opt.max_degree; ++n) {
                std::cout << "H_" << n << "^" << theory_name(t) << " = ";
                if (p == 0)
                    std::cout << eng.group(t, n).to_string();
                else
                    std::cout << "dim_(Z/" << p << ") " << eng.group_mod_p(t, n, p);
                std::cout << "\n";
            }
        }
    }
    return 0;
}

int cmd_split_check(const CommonOpts& opt) {
    FiniteYB X = resolve_biquandle(opt.biquandle);
    if (!X.bar) throw NotABiquandle("split check needs a biquandle");
    HomologyEngine eng(X, opt.guard);
    bool all_ok = true;
    for (int n = 1; n <= opt.max_degree; ++n) {
        AbGroup yb = eng.group(Theory::YB, n);
        AbGroup deg = eng.group(Theory::DEG, n);
        AbGroup nyb = eng.group(Theory::NYB, n);
        AbGroup sum = direct_sum(nyb, deg);
        bool ok = isomorphic(yb, sum);
        all_ok = all_ok && ok;
        std::cout << (ok ? "[ok]   " : "[SPLIT FAILS] ") << "degree " << n << ": H^YB = "
                  << yb.to_string() << "  vs  H^NYB + H^D = " << nyb.to_string() << " + "
                  << deg.to_string() << "\n";
        if (!ok)
            std::cout << "  ** the Yang-Baxter homology does NOT split here; "
                         "this deserves a very close look **\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_tables(int which, const CommonOpts& opt) {
    const auto& cells = expected_table(which);
    std::map<std::string, std::unique_ptr<HomologyEngine>> engines;
    bool all_ok = true;
    for (const auto& c : cells) {
        auto& eng = engines[c.biquandle];
        if (!eng) eng = std::make_unique<HomologyEngine>(make_builtin(c.biquandle), opt.guard);
        auto t0 = std::chrono::steady_clock::now();
        AbGroup got = eng->group(c.theory, c.degree);
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        bool ok = got == c.group;
        all_ok = all_ok && ok;
        std::ostringstream name;
        name << c.biquandle << "  H_" << c.degree << "^" << theory_name(c.theory);
        std::cout << (ok ? "[ok]   " : "[DIFF] ") << name.str() << " = " << got.to_string();
        if (!ok) std::cout << "  expected " << c.group.to_string();
        std::cout << "  [" << std::fixed << std::setprecision(1) << ms << " ms]\n";
    }
    std::cout << (all_ok ? "table matches" : "table DIFFERS") << " (" << cells.size() << " cells)\n";
    return all_ok ? 0 : 1;
}

Diagram load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open diagram file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_diagram(buf.str());
}

int cmd_color(const std::string& diagram_path, const CommonOpts& opt) {
    Diagram d = load_diagram(diagram_path);
    FiniteYB X = resolve_biquandle(opt.biquandle);
    auto cols = colorings(d, X);
    if (opt.format == "json") {
        ordered_json j;
        j["diagram"] = diagram_path;
        j["biquandle"] = opt.biquandle;
        j["components"] = d.components();
        j["count"] = cols.size();
        j["colorings"] = cols;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "components: " << d.components() << "\ncolorings: " << cols.size() << "\n";
        for (const auto& c : cols) {
            for (size_t i = 0; i < c.size(); ++i) std::cout << (i ? "," : "  ") << c[i];
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_invariant(const std::string& diagram_path, const CommonOpts& opt) {
    Diagram d = load_diagram(diagram_path);
    FiniteYB X = resolve_biquandle(opt.biquandle);
    check_guard(X, 3, opt.guard);
    auto iv = homological_invariant(d, X);
    if (opt.format == "json") {
        ordered_json j;
        j["diagram"] = diagram_path;
        j["biquandle"] = opt.biquandle;
        j["coloring_count"] = iv.coloring_count;
        auto arr = ordered_json::array();
        for (const auto& [coords, mult] : iv.classes) {
            ordered_json e;
            e["multiplicity"] = mult;
            e["class"] = coords.to_string();
            arr.push_back(e);
        }
        j["classes"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "diagram: " << diagram_path << "\nbiquandle: " << opt.biquandle << "\n"
                  << iv.to_string();
    }
    return 0;
}

int cmd_envgroup(const CommonOpts& opt) {
    FiniteYB X = resolve_biquandle(opt.biquandle);
    std::cout << envgroup_presentation(X) << "\n";
    return 0;
}

void add_common(CLI::App* app, CommonOpts& opt, bool with_biquandle = true) {
    if (with_biquandle)
        app->add_option("-x,--biquandle", opt.biquandle,
                        "builtin spec ('cyclic N', 'alexander N S T') or file path")
            ->required();
    app->add_option("--theory", opt.theories, "comma-separated subset of yb,deg,nyb");
    app->add_option("--max-degree", opt.max_degree, "top homology degree")->check(CLI::PositiveNumber);
    app->add_option("--coeff", opt.coeff, "Z or pP for the prime field");
    app->add_option("--format", opt.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    app->add_option("--dump-matrices", opt.dump_dir, "write boundary matrices and bases to DIR");
    app->add_option("--guard", opt.guard, "max chain-group rank")->check(CLI::PositiveNumber);
    app->add_flag("--skip-verify", opt.skip_verify, "skip the axiom pre-check");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"set-theoretic Yang-Baxter homology workbench"};
    app.require_subcommand(1);

    std::vector<std::string> gen_spec;
    std::string gen_output;
    auto* gen = app.add_subcommand("gen", "generate a builtin biquandle file");
    gen->add_option("spec", gen_spec, "cyclic N | alexander N S T")->expected(-2);
    gen->add_option("-o,--output", gen_output, "output path (default stdout)");

    CommonOpts vopt;
    auto* verify = app.add_subcommand("verify", "check axioms and chain-complex identities");
    add_common(verify, vopt);

    CommonOpts hopt;
    auto* hom = app.add_subcommand("homology", "compute homology groups per degree and theory");
    add_common(hom, hopt);

    CommonOpts sopt;
    auto* split = app.add_subcommand("split-check", "compare H^YB against H^NYB + H^D per degree");
    add_common(split, sopt);

    int table_which = 0;
    CommonOpts topt;
    auto* tables = app.add_subcommand("tables", "recompute a reference table and diff it");
    tables->add_option("which", table_which, "1 (cyclic) or 2 (alexander)")->required();
    add_common(tables, topt, false);

    std::string color_diagram;
    CommonOpts copt;
    auto* color = app.add_subcommand("color", "enumerate biquandle colorings of a diagram");
    color->add_option("-d,--diagram", color_diagram, "diagram JSON file")->required();
    add_common(color, copt);

    std::string inv_diagram;
    CommonOpts iopt;
    auto* inv = app.add_subcommand("invariant", "coloring count and homological state sum");
    inv->add_option("-d,--diagram", inv_diagram, "diagram JSON file")->required();
    add_common(inv, iopt);

    CommonOpts eopt;
    auto* env = app.add_subcommand("envgroup", "export the enveloping group presentation");
    add_common(env, eopt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_spec, gen_output);
        if (verify->parsed()) return cmd_verify(vopt);
        if (hom->parsed()) return cmd_homology(hopt);
        if (split->parsed()) return cmd_split_check(sopt);
        if (tables->parsed()) return cmd_tables(table_which, topt);
        if (color->parsed()) return cmd_color(color_diagram, copt);
        if (inv->parsed()) return cmd_invariant(inv_diagram, iopt);
        if (env->parsed()) return cmd_envgroup(eopt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
