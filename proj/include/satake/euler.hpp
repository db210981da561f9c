// euler.hpp
// ---------
// Desk-scale numeric model of the global factorization: partial
// L-functions as finite Euler products over synthetic unramified data,
// and numeric local zeta values summed from the cached symbolic
// characters. All places unramified, so the ramified factor is the empty
// product 1 and the factorization reduces to
//
//     prod_v Z_v(s)  ==  L^S(2s-1/2, pi x chi) / L^S(4s-1, chi^?)
//
// computed under both the chi^2 and chi readings of the denominator.

#pragma once

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "satake/characters.hpp"
#include "satake/errors.hpp"
#include "satake/laurent.hpp"
#include "satake/root_system.hpp"

namespace satake {

using complexd = std::complex<double>;

// Per-prime unramified datum: residue cardinality q, Satake parameters,
// and chi(pi) on the uniformizer.
struct SatakeData {
    long long q = 0;
    std::vector<complexd> satake;
    complexd chi{1.0, 0.0};
};

inline void validate_satake_data(const SatakeData& d, int n) {
    if (d.q < 2) throw input_error("SatakeData: q must be a prime power >= 2");
    if (static_cast<int>(d.satake.size()) != n)
        throw input_error("SatakeData: satake list length != rank n");
    for (const auto& a : d.satake)
        if (a == complexd(0.0, 0.0)) throw input_error("SatakeData: zero Satake parameter");
    if (std::abs(std::abs(d.chi) - 1.0) > 1e-12)
        throw input_error("SatakeData: |chi(pi)| must be 1 within 1e-12");
}

inline double max_eigenvalue_abs(const SatakeData& d) {
    double m = 1.0; // the middle eigenvalue 1
    for (const auto& a : d.satake) m = std::max({m, std::abs(a), 1.0 / std::abs(a)});
    return m;
}

constexpr double kDivergenceGuardRatio = 0.9;
constexpr int kTermCap = 10000;

struct LocalZetaValue {
    complexd value{0.0, 0.0};
    int terms_used = 0;
};

// Sum_{m>=0} chi_{m omega_1}(a) x^m with x = chi(pi) q^(-(2s-1/2)),
// characters evaluated numerically from the symbolic cache. Terminates on
// the geometric tail bound |term| * r/(1-r) < tol.
inline LocalZetaValue numeric_local_zeta(const SatakeData& d, complexd s, double tol,
                                         const CharacterCache* cache = nullptr) {
    const int n = static_cast<int>(d.satake.size());
    validate_satake_data(d, n);
    if (tol <= 0.0) throw input_error("numeric_local_zeta: tol must be positive");

    const double q = static_cast<double>(d.q);
    const double ratio = max_eigenvalue_abs(d) * std::pow(q, -(2.0 * s.real() - 0.5));
    if (ratio > kDivergenceGuardRatio)
        throw divergence_guard_error("numeric_local_zeta: convergence ratio " +
                                     std::to_string(ratio) + " exceeds 0.9");

    const complexd x = d.chi * std::exp(-(2.0 * s - 0.5) * std::log(q));
    const RootDatum datum = build_root_datum(CartanType::B, n);
    std::map<std::string, complexd> assignment;
    for (int i = 0; i < n; ++i) assignment["a" + std::to_string(i + 1)] = d.satake[i];

    LocalZetaValue out;
    complexd xpow(1.0, 0.0);
    for (int m = 0; m <= kTermCap; ++m) {
        const LaurentPoly chi_m =
            weyl_character(datum, first_fundamental_multiple2(m, n), cache);
        const complexd term = lp_eval_numeric(chi_m, assignment) * xpow;
        out.value += term;
        out.terms_used = m + 1;
        if (std::abs(term) * ratio / (1.0 - ratio) < tol) return out;
        xpow *= x;
    }
    throw term_cap_error("numeric_local_zeta: tail bound not reached within 10^4 terms");
}

enum class LKind { standard_twisted, abelian_chi, abelian_chi2 };

// Finite Euler product of local factors at the shifted argument dictated
// by kind: 2s-1/2 for the twisted standard factor, 4s-1 for the abelian
// ones.
inline complexd partial_l(const std::vector<SatakeData>& data, complexd s, LKind kind) {
    complexd product(1.0, 0.0);
    for (const auto& d : data) {
        validate_satake_data(d, static_cast<int>(d.satake.size()));
        const double q = static_cast<double>(d.q);
        complexd denom(1.0, 0.0);
        if (kind == LKind::standard_twisted) {
            const complexd t = d.chi * std::exp(-(2.0 * s - 0.5) * std::log(q));
            std::vector<complexd> eigen{complexd(1.0, 0.0)};
            for (const auto& a : d.satake) {
                eigen.push_back(a);
                eigen.push_back(1.0 / a);
            }
            for (const auto& ev : eigen) denom *= complexd(1.0, 0.0) - ev * t;
        } else {
            const complexd t = std::exp(-(4.0 * s - 1.0) * std::log(q));
            const complexd cpow = kind == LKind::abelian_chi ? d.chi : d.chi * d.chi;
            denom = complexd(1.0, 0.0) - cpow * t;
        }
        if (std::abs(denom) <= 1e-12)
            throw pole_proximity_error("partial_l: local denominator within 1e-12 of zero at q=" +
                                       std::to_string(d.q));
        product /= denom;
    }
    return product;
}

struct FactorizationCheckResult {
    complexd lhs{1.0, 0.0};
    complexd rhs_chi2{1.0, 0.0};
    complexd rhs_chi{1.0, 0.0};
    double abs_err_chi2 = 0.0;
    double abs_err_chi = 0.0;
    std::vector<int> terms_used;

    std::string to_text() const {
        auto fmt = [](complexd z) {
            return std::to_string(z.real()) + (z.imag() < 0 ? " - " : " + ") +
                   std::to_string(std::abs(z.imag())) + "i";
        };
        std::string s;
        s += "lhs (product of local zetas): " + fmt(lhs) + "\n";
        s += "rhs (chi^2 reading): " + fmt(rhs_chi2) + "\n";
        s += "rhs (chi reading):   " + fmt(rhs_chi) + "\n";
        s += "abs_err_chi2: " + std::to_string(abs_err_chi2) + "\n";
        s += "abs_err_chi:  " + std::to_string(abs_err_chi) + "\n";
        s += "terms_used:";
        for (int t : terms_used) s += " " + std::to_string(t);
        return s + "\n";
    }

    nlohmann::json to_json() const {
        auto cj = [](complexd z) { return nlohmann::json{{"re", z.real()}, {"im", z.imag()}}; };
        return nlohmann::json{{"lhs", cj(lhs)},
                              {"rhs_chi2", cj(rhs_chi2)},
                              {"rhs_chi", cj(rhs_chi)},
                              {"abs_err_chi2", abs_err_chi2},
                              {"abs_err_chi", abs_err_chi},
                              {"terms_used", terms_used}};
    }
};

inline FactorizationCheckResult factorization_check(const std::vector<SatakeData>& data,
                                                    complexd s, double tol,
                                                    const CharacterCache* cache = nullptr) {
    FactorizationCheckResult r;
    for (const auto& d : data) {
        LocalZetaValue z = numeric_local_zeta(d, s, tol, cache);
        r.lhs *= z.value;
        r.terms_used.push_back(z.terms_used);
    }
    if (!data.empty()) {
        const complexd num = partial_l(data, s, LKind::standard_twisted);
        r.rhs_chi2 = num / partial_l(data, s, LKind::abelian_chi2);
        r.rhs_chi = num / partial_l(data, s, LKind::abelian_chi);
    }
    r.abs_err_chi2 = std::abs(r.lhs - r.rhs_chi2);
    r.abs_err_chi = std::abs(r.lhs - r.rhs_chi);
    return r;
}

// Input file schema:
//   {"n": 2, "primes": [{"q": 2, "satake": [{"re":..,"im":..}, ...],
//                        "chi": {"re":..,"im":..}}, ...]}
struct EulerInput {
    int n = 0;
    std::vector<SatakeData> primes;
};

inline EulerInput parse_euler_input(const nlohmann::json& j) {
    EulerInput in;
    if (!j.is_object() || !j.contains("n") || !j.contains("primes"))
        throw input_error("euler input: expected object with fields 'n' and 'primes'");
    in.n = j.at("n").get<int>();
    if (in.n < 1 || in.n > 6) throw input_error("euler input: need 1 <= n <= 6");
    auto cplx = [](const nlohmann::json& c) {
        if (!c.is_object() || !c.contains("re") || !c.contains("im"))
            throw input_error("euler input: complex numbers are {\"re\":..,\"im\":..}");
        return complexd(c.at("re").get<double>(), c.at("im").get<double>());
    };
    for (const auto& p : j.at("primes")) {
        SatakeData d;
        d.q = p.at("q").get<long long>();
        for (const auto& a : p.at("satake")) d.satake.push_back(cplx(a));
        d.chi = cplx(p.at("chi"));
        validate_satake_data(d, in.n);
        in.primes.push_back(std::move(d));
    }
    return in;
}

inline EulerInput load_euler_input(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw input_error("euler input: cannot open " + path.string());
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("euler input: bad JSON: ") + e.what());
    }
    return parse_euler_input(j);
}

} // namespace satake
