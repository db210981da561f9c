// characters.hpp
// --------------
// Weyl character formula over exact rationals, evaluated at symbolic
// Satake parameters, plus independent cross-checks.
//
// Characters are computed as the alternant ratio
//     chi_lambda = alternant(lambda + rho) / alternant(rho)
// summed over the whole (enumerated) Weyl group. Alternants live in
// half-power variables b_i = a_i^(1/2), exponent = doubled coordinate; the
// quotient must come out with even exponents everywhere, and only then is
// it rewritten in the public a_i variables. That parity gate is a hard
// correctness check, not a convention.
//
// Independent routes kept alongside the production path:
//   * weyl_dimension     - product formula, exact integer
//   * character_oracle   - Freudenthal multiplicity recursion (budget-capped)
//   * hom_sym            - complete homogeneous sums by brute enumeration

#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <unistd.h>

#include "satake/errors.hpp"
#include "satake/laurent.hpp"
#include "satake/root_system.hpp"

namespace satake {

inline std::vector<std::string> numbered_vars(const std::string& stem, int count) {
    std::vector<std::string> v;
    v.reserve(count);
    for (int i = 1; i <= count; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

inline std::vector<std::string> satake_vars(int dim) { return numbered_vars("a", dim); }
inline std::vector<std::string> half_power_vars(int dim) { return numbered_vars("b", dim); }

// Rewrite b_i^(2k) as a_i^k; any odd exponent means the parity invariant
// is broken upstream.
inline LaurentPoly halve_exponents(const LaurentPoly& p, std::vector<std::string> new_vars) {
    LaurentPoly r(std::move(new_vars));
    LaurentPoly::Exponents e;
    for (const auto& [old_e, c] : p.terms()) {
        e = old_e;
        for (auto& x : e) {
            if (x % 2 != 0)
                throw non_integral_result_error("halve_exponents: odd half-power exponent");
            x /= 2;
        }
        r.add_term(e, c);
    }
    return r;
}

struct CharacterKey {
    CartanType cartan_type;
    int rank = 0;
    Weight highest_weight2;
    std::vector<std::string> var_names;

    std::string to_string() const {
        std::string s(1, cartan_letter(cartan_type));
        s += " " + std::to_string(rank);
        for (int c : highest_weight2.coords2) s += " " + std::to_string(c);
        s += " |";
        for (const auto& v : var_names) s += " " + v;
        return s;
    }

    // sidecar line inside cache files
    std::string key_line() const {
        std::string s = "key: ";
        s += cartan_letter(cartan_type);
        s += " " + std::to_string(rank);
        for (int c : highest_weight2.coords2) s += " " + std::to_string(c);
        return s;
    }
};

namespace detail {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

} // namespace detail

// Disk cache for computed characters. Files are written whole to a
// temporary name and renamed into place, so concurrent readers never see
// a partial file. Schema is versioned; anything unreadable or mismatched
// counts as a miss and gets rewritten.
class CharacterCache {
public:
    static constexpr const char* schema_version_line = "version: 1";

    CharacterCache() = default; // disabled
    explicit CharacterCache(std::filesystem::path root) : root_(std::move(root)), enabled_(true) {}

    bool enabled() const { return enabled_; }
    const std::filesystem::path& root() const { return root_; }

    std::optional<LaurentPoly> load(const CharacterKey& key) const {
        if (!enabled_) return std::nullopt;
        std::ifstream in(file_for(key), std::ios::binary);
        if (!in) return std::nullopt;
        std::string version, key_line;
        if (!std::getline(in, version) || version != schema_version_line) return std::nullopt;
        if (!std::getline(in, key_line) || key_line != key.key_line()) return std::nullopt;
        std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        try {
            LaurentPoly p = parse_laurent(rest);
            if (p.vars() != key.var_names) return std::nullopt;
            return p;
        } catch (const parse_error&) {
            return std::nullopt;
        }
    }

    void store(const CharacterKey& key, const LaurentPoly& p) const {
        if (!enabled_) return;
        namespace fs = std::filesystem;
        fs::path target = file_for(key);
        fs::create_directories(target.parent_path());
        fs::path tmp = target;
        tmp += ".tmp-" + std::to_string(static_cast<unsigned long>(::getpid()));
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << schema_version_line << "\n" << key.key_line() << "\n" << serialize(p);
            if (!out) {
                std::error_code ec;
                fs::remove(tmp, ec);
                return; // cache is best-effort
            }
        }
        std::error_code ec;
        fs::rename(tmp, target, ec);
        if (ec) fs::remove(tmp, ec);
    }

    struct Stats {
        std::uintmax_t files = 0;
        std::uintmax_t bytes = 0;
    };

    Stats stats() const {
        Stats s;
        if (!enabled_) return s;
        namespace fs = std::filesystem;
        fs::path base = root_ / "chars";
        if (!fs::exists(base)) return s;
        for (const auto& entry : fs::recursive_directory_iterator(base)) {
            if (entry.is_regular_file() && entry.path().extension() == ".lp") {
                ++s.files;
                s.bytes += entry.file_size();
            }
        }
        return s;
    }

    std::uintmax_t clear() const {
        if (!enabled_) return 0;
        std::error_code ec;
        return std::filesystem::remove_all(root_ / "chars", ec);
    }

private:
    std::filesystem::path root_;
    bool enabled_ = false;

    std::filesystem::path file_for(const CharacterKey& key) const {
        std::string name = std::string(1, cartan_letter(key.cartan_type)) +
                           std::to_string(key.rank);
        return root_ / "chars" / name / (detail::hex64(detail::fnv1a64(key.to_string())) + ".lp");
    }
};

// Sum of det(w) * b^(w(w8)) over the full Weyl group, in half-power
// variables. Non-regular w8 cancels to zero.
inline LaurentPoly alternant(const RootDatum& d, const Weight& w8) {
    if (static_cast<int>(w8.size()) != d.dim)
        throw variable_mismatch_error("alternant: weight length != datum dimension");
    LaurentPoly p(half_power_vars(d.dim));
    LaurentPoly::Exponents e(d.dim);
    for (const auto& w : d.weyl_elements) {
        for (int i = 0; i < d.dim; ++i) e[i] = w.sign[i] * w8.coords2[w.perm[i]];
        p.add_term(e, Rational(w.det));
    }
    return p;
}

namespace detail {

inline void require_dominant_integral(const RootDatum& d, const Weight& lambda2,
                                      const char* who) {
    if (!is_dominant(d, lambda2))
        throw not_dominant_error(std::string(who) + ": weight " + lambda2.to_string() +
                                 " is not dominant");
    if (!lambda2.is_even())
        throw input_error(std::string(who) + ": weight " + lambda2.to_string() +
                          " is not integral for the group (odd doubled coordinate)");
}

} // namespace detail

inline LaurentPoly weyl_character(const RootDatum& d, const Weight& lambda2,
                                  const CharacterCache* cache = nullptr) {
    detail::require_dominant_integral(d, lambda2, "weyl_character");

    CharacterKey key{d.cartan_type, d.rank, lambda2, satake_vars(d.dim)};
    if (cache) {
        if (auto hit = cache->load(key)) return *hit;
    }

    LaurentPoly num = alternant(d, lambda2 + d.rho2);
    LaurentPoly den = alternant(d, d.rho2);
    LaurentPoly quotient_b = lp_exact_div(num, den);
    LaurentPoly chi = halve_exponents(quotient_b, key.var_names);
    for (const auto& [e, c] : chi.terms()) {
        (void)e;
        if (!c.is_integer())
            throw non_integral_result_error("weyl_character: non-integer coefficient");
    }

    if (cache) cache->store(key, chi);
    return chi;
}

// Product formula Prod_{alpha>0} <lambda+rho, alpha> / <rho, alpha>,
// exact; the pairing normalization cancels per factor.
inline long long weyl_dimension(const RootDatum& d, const Weight& lambda2) {
    detail::require_dominant_integral(d, lambda2, "weyl_dimension");
    Rational dim(1);
    const Weight lr2 = lambda2 + d.rho2;
    for (const auto& alpha2 : d.positive_roots2)
        dim *= Rational(BigInt(pairing2(lr2, alpha2)), BigInt(pairing2(d.rho2, alpha2)));
    if (!dim.is_integer() || dim.signum() <= 0)
        throw internal_error("weyl_dimension: product is not a positive integer");
    return dim.num().to_int64();
}

// Complete homogeneous symmetric polynomial h_m(a_1..a_{n_vars}): every
// monomial of total degree m, coefficient 1, by direct enumeration.
inline LaurentPoly hom_sym(int n_vars, int m) {
    if (m < 0) throw negative_degree_error("hom_sym: negative degree");
    if (n_vars < 1) throw input_error("hom_sym: need at least one variable");
    LaurentPoly p(satake_vars(n_vars));
    LaurentPoly::Exponents e(n_vars, 0);
    // lexicographic enumeration of compositions of m into n_vars parts
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == n_vars - 1) {
            e[slot] = remaining;
            p.add_term(e, Rational(1));
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            e[slot] = k;
            self(self, slot + 1, remaining - k);
        }
    };
    rec(rec, 0, m);
    return p;
}

namespace detail {

inline Weight dominant_conjugate(CartanType type, const Weight& w8) {
    Weight r = w8;
    if (type == CartanType::A) {
        std::sort(r.coords2.begin(), r.coords2.end(), std::greater<int>());
    } else {
        for (auto& x : r.coords2) x = std::abs(x);
        std::sort(r.coords2.begin(), r.coords2.end(), std::greater<int>());
    }
    return r;
}

// lambda - nu in the non-negative span of the simple roots
inline bool below_in_root_order(const RootDatum& d, const Weight& lambda2, const Weight& nu2) {
    long long partial = 0; // doubled units
    for (int i = 0; i < d.dim; ++i) {
        partial += lambda2.coords2[i] - nu2.coords2[i];
        if (i + 1 < d.dim && partial < 0) return false;
    }
    switch (d.cartan_type) {
        case CartanType::A:
            return partial == 0;
        case CartanType::B:
            return partial >= 0;
        case CartanType::C:
            // last simple root is 2e_n: its coefficient is total/2
            return partial >= 0 && partial % 4 == 0;
    }
    return false;
}

inline std::vector<Weight> dominant_weights_below(const RootDatum& d, const Weight& lambda2) {
    std::vector<Weight> out;
    const int top = lambda2.coords2.empty() ? 0 : lambda2.coords2[0];
    const int bottom = d.cartan_type == CartanType::A ? lambda2.coords2[d.dim - 1] : 0;
    std::vector<int> cur(d.dim, 0);
    auto rec = [&](auto&& self, int slot, int upper) -> void {
        if (slot == d.dim) {
            Weight nu2{cur};
            if (below_in_root_order(d, lambda2, nu2)) out.push_back(std::move(nu2));
            return;
        }
        for (int v = upper; v >= bottom; v -= 2) { // even coords only (integral weights)
            cur[slot] = v;
            self(self, slot + 1, v);
        }
    };
    int start = top % 2 == 0 ? top : top - 1;
    rec(rec, 0, start);
    // process highest first; pairing with rho strictly drops along root order
    std::sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) {
        return pairing2(x, d.rho2) > pairing2(y, d.rho2);
    });
    return out;
}

} // namespace detail

// Independent character computation via Freudenthal's multiplicity
// recursion, deliberately unoptimized and budget-capped: it exists to
// catch bugs in the alternant route, not to be fast.
inline LaurentPoly character_oracle(const RootDatum& d, const Weight& lambda2) {
    detail::require_dominant_integral(d, lambda2, "character_oracle");
    long long height2 = 0;
    for (int c : lambda2.coords2) height2 += std::abs(c);
    if (d.rank > 2 || height2 > 12)
        throw oracle_budget_error("character_oracle: out of budget (rank <= 2, |coords2| <= 12)");

    const std::vector<Weight> dominants = detail::dominant_weights_below(d, lambda2);
    const long long lambda_norm = pairing2(lambda2 + d.rho2, lambda2 + d.rho2);

    std::map<Weight, long long> mult;
    for (const auto& mu2 : dominants) {
        if (mu2 == lambda2) {
            mult[mu2] = 1;
            continue;
        }
        long long num = 0;
        for (const auto& alpha2 : d.positive_roots2) {
            for (int k = 1;; ++k) {
                Weight nu2 = mu2 + k * alpha2;
                auto it = mult.find(detail::dominant_conjugate(d.cartan_type, nu2));
                if (it == mult.end()) break; // alpha-strings are unbroken
                num += pairing2(nu2, alpha2) * it->second;
            }
        }
        const long long den = lambda_norm - pairing2(mu2 + d.rho2, mu2 + d.rho2);
        if (den <= 0 || (2 * num) % den != 0)
            throw internal_error("character_oracle: Freudenthal recursion out of kilter");
        mult[mu2] = 2 * num / den;
    }

    LaurentPoly p(half_power_vars(d.dim));
    for (const auto& [mu2, m] : mult) {
        std::set<std::vector<int>> orbit;
        for (const auto& w : d.weyl_elements) orbit.insert(weyl_apply(w, mu2).coords2);
        for (const auto& img : orbit) p.add_term(img, Rational(m));
    }
    return halve_exponents(p, satake_vars(d.dim));
}

} // namespace satake
