#include "ybh/finite_yb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ybh {

namespace {

// Populate r_inv and bar if they exist; leave them empty otherwise.
void compute_derived_maps(FiniteYB& X) {
    const int n = X.size;

    PairTable inv(n, std::vector<std::pair<int, int>>(n, {-1, -1}));
    bool bijective = true;
    for (int a = 0; a < n && bijective; ++a) {
        for (int b = 0; b < n; ++b) {
            auto [c, d] = X.apply(a, b);
            if (inv[c][d].first != -1) {
                bijective = false;
                break;
            }
            inv[c][d] = {a, b};
        }
    }
    if (bijective) X.r_inv = std::move(inv);

    std::vector<int> bar(n, -1);
    bool is_biquandle = true;
    for (int a = 0; a < n; ++a) {
        int count = 0;
        for (int b = 0; b < n; ++b) {
            if (X.r1[a][b] == a && X.r2[a][b] == b) {
                bar[a] = b;
                ++count;
            }
        }
        if (count != 1) {
            is_biquandle = false;
            break;
        }
    }
    if (is_biquandle) X.bar = std::move(bar);
}

long long mod_norm(long long v, long long n) {
    long long r = v % n;
    return r < 0 ? r + n : r;
}

}  // namespace

FiniteYB make_cyclic(int n) {
    if (n < 1) throw EntryOutOfRange("cyclic biquandle requires n >= 1");
    FiniteYB X;
    X.size = n;
    X.r1.assign(n, std::vector<int>(n));
    X.r2.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            X.r1[i][j] = (j + 1) % n;
            X.r2[i][j] = static_cast<int>(mod_norm(i - 1, n));
        }
    }
    compute_derived_maps(X);
    return X;
}

FiniteYB make_alexander(int n, long long s, long long t) {
    if (n < 1) throw EntryOutOfRange("alexander biquandle requires n >= 1");
    s = mod_norm(s, n);
    t = mod_norm(t, n);
    if (std::gcd(s, static_cast<long long>(n)) != 1) {
        std::ostringstream os;
        os << "s = " << s << " is not a unit mod " << n;
        throw NotAUnit(os.str());
    }
    if (std::gcd(t, static_cast<long long>(n)) != 1) {
        std::ostringstream os;
        os << "t = " << t << " is not a unit mod " << n;
        throw NotAUnit(os.str());
    }
    if (mod_norm((1 - s) * (1 - t), n) != 0) {
        std::ostringstream os;
        os << "(1-s)(1-t) = " << (1 - s) * (1 - t) << " is not 0 mod " << n;
        throw ConditionFails(os.str());
    }
    FiniteYB X;
    X.size = n;
    X.r1.assign(n, std::vector<int>(n));
    X.r2.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            X.r1[a][b] = static_cast<int>(mod_norm((1 - s) * a + s * b, n));
            X.r2[a][b] = static_cast<int>(mod_norm(t * a + (1 - t) * b, n));
        }
    }
    compute_derived_maps(X);
    return X;
}

FiniteYB from_tables(const Table& r1, const Table& r2) {
    const auto n = r1.size();
    if (n == 0 || r2.size() != n) throw ShapeMismatch("r1 and r2 must be square, same size, nonempty");
    for (const auto* tab : {&r1, &r2}) {
        for (const auto& row : *tab) {
            if (row.size() != n) throw ShapeMismatch("tables must be square");
            for (int v : row) {
                if (v < 0 || v >= static_cast<int>(n)) {
                    std::ostringstream os;
                    os << "table entry " << v << " outside 0.." << n - 1;
                    throw EntryOutOfRange(os.str());
                }
            }
        }
    }
    FiniteYB X;
    X.size = static_cast<int>(n);
    X.r1 = r1;
    X.r2 = r2;
    compute_derived_maps(X);
    return X;
}

AxiomReport verify_axioms(const FiniteYB& X) {
    const int n = X.size;
    AxiomReport rep;

    // YBE on all triples: (R x Id)(Id x R)(R x Id) = (Id x R)(R x Id)(Id x R).
    rep.ybe_holds = true;
    for (int a = 0; a < n && rep.ybe_holds; ++a) {
        for (int b = 0; b < n && rep.ybe_holds; ++b) {
            for (int c = 0; c < n; ++c) {
                // left side
                auto [l1, l2] = X.apply(a, b);
                auto [l3, l4] = X.apply(l2, c);
                auto [l5, l6] = X.apply(l1, l3);
                // right side
                auto [m1, m2] = X.apply(b, c);
                auto [m3, m4] = X.apply(a, m1);
                auto [m5, m6] = X.apply(m4, m2);
                if (l5 != m3 || l6 != m5 || l4 != m6) {
                    rep.ybe_holds = false;
                    rep.ybe_witness = {a, b, c};
                    break;
                }
            }
        }
    }

    rep.r_bijective = true;
    {
        std::vector<char> seen(static_cast<size_t>(n) * n, 0);
        for (int a = 0; a < n && rep.r_bijective; ++a) {
            for (int b = 0; b < n; ++b) {
                auto [c, d] = X.apply(a, b);
                size_t idx = static_cast<size_t>(c) * n + d;
                if (seen[idx]) {
                    rep.r_bijective = false;
                    rep.bijectivity_witness = {c, d};
                    break;
                }
                seen[idx] = 1;
            }
        }
    }

    rep.left_invertible = true;
    for (int a = 0; a < n; ++a) {
        std::vector<char> hit(n, 0);
        for (int b = 0; b < n; ++b) hit[X.r1[a][b]] = 1;
        if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
            rep.left_invertible = false;
            rep.left_witness = a;
            break;
        }
    }

    rep.right_invertible = true;
    for (int b = 0; b < n; ++b) {
        std::vector<char> hit(n, 0);
        for (int a = 0; a < n; ++a) hit[X.r2[a][b]] = 1;
        if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
            rep.right_invertible = false;
            rep.right_witness = b;
            break;
        }
    }

    rep.biquandle = true;
    for (int a = 0; a < n; ++a) {
        int count = 0;
        for (int b = 0; b < n; ++b)
            if (X.r1[a][b] == a && X.r2[a][b] == b) ++count;
        if (count != 1) {
            rep.biquandle = false;
            rep.fixed_pair_witness = a;
            break;
        }
    }

    if (rep.biquandle) {
        // Dual statement: for every b there is exactly one a with R(a,b)=(a,b).
        rep.biquandle_dual = true;
        for (int b = 0; b < n; ++b) {
            int count = 0;
            for (int a = 0; a < n; ++a)
                if (X.r1[a][b] == a && X.r2[a][b] == b) ++count;
            if (count != 1) {
                rep.biquandle_dual = false;
                break;
            }
        }
    }

    return rep;
}

PairTable invert_R(const FiniteYB& X) {
    const int n = X.size;
    PairTable inv(n, std::vector<std::pair<int, int>>(n, {-1, -1}));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            auto [c, d] = X.apply(a, b);
            if (inv[c][d].first != -1) {
                std::ostringstream os;
                os << "R is not bijective: pairs (" << inv[c][d].first << "," << inv[c][d].second
                   << ") and (" << a << "," << b << ") both map to (" << c << "," << d << ")";
                throw NotBijective(os.str());
            }
            inv[c][d] = {a, b};
        }
    }
    return inv;
}

}  // namespace ybh
