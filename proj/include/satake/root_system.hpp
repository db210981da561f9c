// root_system.hpp
// ---------------
// Root systems, enumerated Weyl groups, and weight combinatorics for
// Cartan types A, B, C in Bourbaki epsilon-coordinates.
//
// All weights are stored in DOUBLED coordinates (coords2), so the
// half-integral Weyl vector of B_n stays in integer arithmetic: a weight
// with true coordinates (3/2, 1/2) is stored as (3, 1). A weight is
// integral for the group iff every doubled coordinate is even.
//
// Type A_r is realized in r+1 coordinates (so the GL_n datum is A_{n-1}
// with n slots); r = 0 is allowed there so GL_1 flows through the same
// code path. Types B/C have rank slots. Weyl groups are fully enumerated,
// capped at rank 6 (|W(B_6)| = 46080).

#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "satake/errors.hpp"

namespace satake {

enum class CartanType { A, B, C };

inline char cartan_letter(CartanType t) {
    switch (t) {
        case CartanType::A: return 'A';
        case CartanType::B: return 'B';
        default: return 'C';
    }
}

inline CartanType cartan_from_letter(char ch) {
    switch (ch) {
        case 'A': case 'a': return CartanType::A;
        case 'B': case 'b': return CartanType::B;
        case 'C': case 'c': return CartanType::C;
        default: throw input_error(std::string("unknown Cartan type '") + ch + "'");
    }
}

struct Weight {
    std::vector<int> coords2; // doubled epsilon-coordinates

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords2(std::move(c)) {}

    std::size_t size() const { return coords2.size(); }
    int operator[](std::size_t i) const { return coords2[i]; }

    bool is_zero() const {
        return std::all_of(coords2.begin(), coords2.end(), [](int x) { return x == 0; });
    }
    bool is_even() const {
        return std::all_of(coords2.begin(), coords2.end(), [](int x) { return x % 2 == 0; });
    }

    friend Weight operator+(const Weight& a, const Weight& b) {
        if (a.size() != b.size()) throw variable_mismatch_error("Weight: length mismatch");
        Weight r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r.coords2[i] += b.coords2[i];
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        if (a.size() != b.size()) throw variable_mismatch_error("Weight: length mismatch");
        Weight r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r.coords2[i] -= b.coords2[i];
        return r;
    }
    friend Weight operator*(int k, const Weight& a) {
        Weight r = a;
        for (auto& x : r.coords2) x *= k;
        return r;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords2 == b.coords2; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.coords2 < b.coords2; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords2.size(); ++i) {
            if (i) s += ",";
            int c = coords2[i];
            s += (c % 2 == 0) ? std::to_string(c / 2) : std::to_string(c) + "/2";
        }
        return s + ")";
    }
};

// m * e_1 in doubled coordinates
inline Weight first_fundamental_multiple2(int m, int dim) {
    std::vector<int> c(dim, 0);
    if (dim > 0) c[0] = 2 * m;
    return Weight(std::move(c));
}

// Signed permutation acting by (w.v)[i] = sign[i] * v[perm[i]];
// det is the determinant of the matrix, i.e. (-1)^length.
struct WeylElement {
    std::vector<int> perm;
    std::vector<int> sign;
    int det = 1;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.perm == b.perm && a.sign == b.sign;
    }
};

inline Weight weyl_apply(const WeylElement& w, const Weight& v) {
    if (w.perm.size() != v.size()) throw variable_mismatch_error("weyl_apply: length mismatch");
    Weight r = v;
    for (std::size_t i = 0; i < v.size(); ++i)
        r.coords2[i] = w.sign[i] * v.coords2[w.perm[i]];
    return r;
}

// (w o u): first u, then w.
inline WeylElement weyl_compose(const WeylElement& w, const WeylElement& u) {
    WeylElement r;
    const std::size_t n = w.perm.size();
    r.perm.resize(n);
    r.sign.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.perm[i] = u.perm[w.perm[i]];
        r.sign[i] = w.sign[i] * u.sign[w.perm[i]];
    }
    r.det = w.det * u.det;
    return r;
}

struct RootDatum {
    CartanType cartan_type;
    int rank = 0;
    int dim = 0; // coordinate slots: rank for B/C, rank+1 for A
    std::vector<Weight> positive_roots2; // doubled
    Weight rho2;                         // doubled Weyl vector
    std::vector<WeylElement> weyl_elements;

    std::string name() const { return std::string(1, cartan_letter(cartan_type)) + std::to_string(rank); }
};

namespace detail {

inline int permutation_parity(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace detail

inline RootDatum build_root_datum(CartanType type, int rank) {
    if (rank > 6) throw unsupported_rank_error("build_root_datum: rank > 6 not supported");
    if (type == CartanType::A) {
        if (rank < 0) throw unsupported_rank_error("build_root_datum: negative rank");
    } else if (rank < 1) {
        throw unsupported_rank_error("build_root_datum: rank must be >= 1");
    }

    RootDatum d;
    d.cartan_type = type;
    d.rank = rank;
    d.dim = type == CartanType::A ? rank + 1 : rank;

    auto root2 = [&](int i, int j, int ci, int cj) {
        std::vector<int> c(d.dim, 0);
        c[i] = 2 * ci;
        if (j >= 0) c[j] = 2 * cj;
        return Weight(std::move(c));
    };

    if (type == CartanType::A) {
        for (int i = 0; i < d.dim; ++i)
            for (int j = i + 1; j < d.dim; ++j) d.positive_roots2.push_back(root2(i, j, 1, -1));
    } else {
        for (int i = 0; i < d.dim; ++i) {
            for (int j = i + 1; j < d.dim; ++j) {
                d.positive_roots2.push_back(root2(i, j, 1, -1));
                d.positive_roots2.push_back(root2(i, j, 1, 1));
            }
            d.positive_roots2.push_back(type == CartanType::B ? root2(i, -1, 1, 0)
                                                              : root2(i, -1, 2, 0));
        }
    }

    // rho2 = sum of positive roots in true coordinates
    std::vector<int> rho(d.dim, 0);
    for (const auto& r : d.positive_roots2)
        for (int i = 0; i < d.dim; ++i) rho[i] += r.coords2[i];
    for (auto& x : rho) {
        if (x % 2 != 0) throw internal_error("build_root_datum: odd positive-root sum");
        x /= 2;
    }
    d.rho2 = Weight(std::move(rho));

    // enumerate the Weyl group: S_dim (type A) or signed permutations
    std::vector<int> perm(d.dim);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (const auto& p : perms) {
        int parity = detail::permutation_parity(p);
        if (type == CartanType::A) {
            WeylElement w;
            w.perm = p;
            w.sign.assign(d.dim, 1);
            w.det = parity;
            d.weyl_elements.push_back(std::move(w));
        } else {
            for (unsigned mask = 0; mask < (1u << d.dim); ++mask) {
                WeylElement w;
                w.perm = p;
                w.sign.resize(d.dim);
                int det = parity;
                for (int i = 0; i < d.dim; ++i) {
                    w.sign[i] = (mask >> i) & 1 ? -1 : 1;
                    det *= w.sign[i];
                }
                w.det = det;
                d.weyl_elements.push_back(std::move(w));
            }
        }
    }
    return d;
}

// Doubled simple roots in Bourbaki order.
inline std::vector<Weight> simple_roots2(const RootDatum& d) {
    std::vector<Weight> out;
    for (int i = 0; i + 1 < d.dim; ++i) {
        std::vector<int> c(d.dim, 0);
        c[i] = 2;
        c[i + 1] = -2;
        out.push_back(Weight(std::move(c)));
    }
    if (d.cartan_type != CartanType::A) {
        std::vector<int> c(d.dim, 0);
        c[d.dim - 1] = d.cartan_type == CartanType::B ? 2 : 4;
        out.push_back(Weight(std::move(c)));
    }
    return out;
}

inline long long pairing2(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw variable_mismatch_error("pairing2: length mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<long long>(a.coords2[i]) * b.coords2[i];
    return s;
}

inline bool is_dominant(const RootDatum& d, const Weight& w8) {
    if (static_cast<int>(w8.size()) != d.dim)
        throw variable_mismatch_error("is_dominant: weight length != datum dimension");
    for (int i = 0; i + 1 < d.dim; ++i)
        if (w8.coords2[i] < w8.coords2[i + 1]) return false;
    if (d.cartan_type != CartanType::A && d.dim > 0 && w8.coords2[d.dim - 1] < 0) return false;
    return true;
}

// One (sign, image) entry per Weyl element.
inline std::vector<std::pair<int, Weight>> weyl_orbit_terms(const RootDatum& d, const Weight& w8) {
    if (static_cast<int>(w8.size()) != d.dim)
        throw variable_mismatch_error("weyl_orbit_terms: weight length != datum dimension");
    std::vector<std::pair<int, Weight>> out;
    out.reserve(d.weyl_elements.size());
    for (const auto& w : d.weyl_elements) out.emplace_back(w.det, weyl_apply(w, w8));
    return out;
}

// Simple reflections as group elements (swap i,i+1; plus the sign flip of
// the last coordinate for B/C).
inline std::vector<WeylElement> simple_reflections(const RootDatum& d) {
    std::vector<WeylElement> out;
    for (int i = 0; i + 1 < d.dim; ++i) {
        WeylElement w;
        w.perm.resize(d.dim);
        std::iota(w.perm.begin(), w.perm.end(), 0);
        std::swap(w.perm[i], w.perm[i + 1]);
        w.sign.assign(d.dim, 1);
        w.det = -1;
        out.push_back(std::move(w));
    }
    if (d.cartan_type != CartanType::A) {
        WeylElement w;
        w.perm.resize(d.dim);
        std::iota(w.perm.begin(), w.perm.end(), 0);
        w.sign.assign(d.dim, 1);
        w.sign[d.dim - 1] = -1;
        w.det = -1;
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace satake
