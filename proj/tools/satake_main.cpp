// satake — command-line front end: exact identity verification, character
// and Whittaker evaluation, L-factor expansion, and the numeric Euler
// product check.
//
// Exit codes: 0 success / identity verified, 1 identity check reported
// failure (or --paper-claim mismatch), 2 input or usage error, 3 internal
// invariant violation.

#include <complex>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "satake/satake.hpp"

namespace {

using nlohmann::json;

std::vector<int> parse_int_csv(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw satake::input_error("bad integer list entry '" + item + "'");
        }
    }
    if (out.empty()) throw satake::input_error("empty integer list");
    return out;
}

std::complex<double> parse_complex(const std::string& text) {
    auto comma = text.find(',');
    try {
        if (comma == std::string::npos) return {std::stod(text), 0.0};
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw satake::input_error("bad complex literal '" + text + "' (want re[,im])");
    }
}

satake::Weight doubled(const std::vector<int>& true_coords) {
    std::vector<int> c(true_coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = 2 * true_coords[i];
    return satake::Weight(std::move(c));
}

std::filesystem::path resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SATAKE_CACHE_DIR"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "satake";
    return std::filesystem::path(".satake-cache");
}

struct Output {
    std::string format = "text";
    bool is_json() const { return format == "json"; }
    void emit(const std::string& text, const json& j) const {
        if (is_json())
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text;
    }
};

int report_exit_code(const satake::VerificationReport& rep, bool paper_claim) {
    if (!rep.passed) return 1;
    if (paper_claim && rep.chi_power_comparison &&
        *rep.chi_power_comparison != satake::ChiPowerComparison::matches_chi &&
        *rep.chi_power_comparison != satake::ChiPowerComparison::matches_both)
        return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic verifier and numeric explorer for unramified local zeta "
                 "identities of Sp(2n) x GL(1)"};
    app.require_subcommand(1);
    app.fallthrough(); // global --format/--cache-dir may follow the subcommand

    Output out;
    std::string cache_flag;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--cache-dir", cache_flag,
                   "character cache directory (env SATAKE_CACHE_DIR, default ~/.cache/satake)");

    // verify sp2n|gln|sl2
    auto* verify = app.add_subcommand("verify", "verify a local identity exactly");
    verify->require_subcommand(1);
    int v_n = 2;
    int v_order = 10;
    bool paper_claim = false;
    auto* v_sp2n = verify->add_subcommand("sp2n", "det(1-Ax) * Z(x) == 1 - x^2");
    v_sp2n->add_option("--n,--rank", v_n, "rank n of Sp(2n)")->capture_default_str();
    v_sp2n->add_option("--order", v_order, "truncation order N")->capture_default_str();
    v_sp2n->add_flag("--paper-claim", paper_claim,
                     "exit 1 unless the chi-power-1 reading of the abelian factor matches");
    auto* v_gln = verify->add_subcommand("gln", "prod(1-a_i y) * Z(y) == 1");
    v_gln->add_option("--n,--rank", v_n, "rank n of GL(n)")->capture_default_str();
    v_gln->add_option("--order", v_order, "truncation order N")->capture_default_str();
    auto* v_sl2 = verify->add_subcommand("sl2", "the n = 1 specialization");
    v_sl2->add_option("--order", v_order, "truncation order N")->capture_default_str();

    // character
    auto* character = app.add_subcommand("character", "Weyl character at symbolic Satake parameters");
    std::string c_type = "B";
    int c_rank = 2;
    std::string c_weight;
    character->add_option("--type", c_type, "Cartan type A|B|C")->capture_default_str();
    character->add_option("--rank", c_rank, "rank")->capture_default_str();
    character->add_option("--weight", c_weight, "highest weight, comma-separated integers")
        ->required();

    // whittaker
    auto* whittaker = app.add_subcommand("whittaker", "unramified Whittaker value on a cocharacter");
    std::string w_group = "sp2n";
    int w_n = 2;
    std::string w_weight;
    whittaker->add_option("--group", w_group, "sp2n or gln")
        ->check(CLI::IsMember({"sp2n", "gln"}))
        ->capture_default_str();
    whittaker->add_option("--n,--rank", w_n, "rank n")->capture_default_str();
    whittaker->add_option("--weight", w_weight, "torus cocharacter, comma-separated integers")
        ->required();

    // lfactor
    auto* lfactor = app.add_subcommand("lfactor", "expanded local L-factor denominator");
    int l_n = 2;
    int l_abelian = 0;
    lfactor->add_option("--n,--rank", l_n, "rank n (standard twisted factor)")
        ->capture_default_str();
    lfactor->add_option("--abelian", l_abelian, "print 1 - c^power y instead (power 1 or 2)");

    // euler
    auto* euler = app.add_subcommand("euler", "numeric Euler-product factorization check");
    std::string e_input;
    std::string e_s = "2.0";
    double e_tol = 1e-10;
    euler->add_option("--input", e_input, "JSON file with per-prime Satake data")->required();
    euler->add_option("--s", e_s, "evaluation point, re[,im]")->capture_default_str();
    euler->add_option("--tol", e_tol, "tail tolerance for local sums")->capture_default_str();

    // cache
    auto* cache_cmd = app.add_subcommand("cache", "character cache maintenance");
    cache_cmd->require_subcommand(1);
    auto* cache_stats = cache_cmd->add_subcommand("stats", "count cached characters");
    auto* cache_clear = cache_cmd->add_subcommand("clear", "remove all cached characters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        satake::CharacterCache cache(resolve_cache_dir(cache_flag));

        if (v_sp2n->parsed() || v_sl2->parsed() || v_gln->parsed()) {
            if (v_order < 0) throw satake::input_error("--order must be >= 0");
            satake::VerificationReport rep;
            if (v_sp2n->parsed())
                rep = satake::verify_sp2n_identity(v_n, v_order, &cache);
            else if (v_gln->parsed())
                rep = satake::verify_gln_identity(v_n, v_order, &cache);
            else
                rep = satake::verify_sl2_identity(v_order, &cache);
            out.emit(rep.to_text(), rep.to_json());
            return report_exit_code(rep, v_sp2n->parsed() && paper_claim);
        }

        if (character->parsed()) {
            if (c_type.size() != 1) throw satake::input_error("--type must be A, B or C");
            auto datum = satake::build_root_datum(satake::cartan_from_letter(c_type[0]), c_rank);
            auto lambda2 = doubled(parse_int_csv(c_weight));
            if (static_cast<int>(lambda2.size()) != datum.dim)
                throw satake::input_error("--weight needs " + std::to_string(datum.dim) +
                                          " coordinates for " + datum.name());
            auto chi = satake::weyl_character(datum, lambda2, &cache);
            json j{{"type", std::string(1, satake::cartan_letter(datum.cartan_type))},
                   {"rank", datum.rank},
                   {"weight", parse_int_csv(c_weight)},
                   {"character", chi.to_string()},
                   {"serialized", satake::serialize(chi)},
                   {"dimension", satake::weyl_dimension(datum, lambda2)}};
            out.emit(chi.to_string() + "\n", j);
            return 0;
        }

        if (whittaker->parsed()) {
            auto group = w_group == "sp2n" ? satake::Group::Sp2n : satake::Group::GLn;
            auto lambda2 = doubled(parse_int_csv(w_weight));
            if (static_cast<int>(lambda2.size()) != w_n)
                throw satake::input_error("--weight needs " + std::to_string(w_n) +
                                          " coordinates for n = " + std::to_string(w_n));
            auto value = satake::cs_whittaker_value(group, w_n, lambda2, &cache);
            json j{{"group", w_group},
                   {"n", w_n},
                   {"weight", parse_int_csv(w_weight)},
                   {"is_zero", value.is_zero},
                   {"q_exponent2", value.q_exponent2},
                   {"char_part", value.char_part.to_string()}};
            out.emit(value.to_string() + "\n", j);
            return 0;
        }

        if (lfactor->parsed()) {
            std::vector<satake::LaurentPoly> poly;
            std::string head;
            if (l_abelian != 0) {
                poly = satake::abelian_lfactor_poly(l_abelian);
                head = "1 - c^" + std::to_string(l_abelian) + " y =";
            } else {
                poly = satake::standard_lfactor_poly(l_n);
                head = "det(1 - A y), n = " + std::to_string(l_n) + ":";
            }
            std::string text = head + "\n";
            json coeffs = json::array();
            for (std::size_t k = 0; k < poly.size(); ++k) {
                text += "  y^" + std::to_string(k) + ": " + poly[k].to_string() + "\n";
                coeffs.push_back(poly[k].to_string());
            }
            json j{{"degree", poly.size() - 1}, {"coefficients", coeffs}};
            if (l_abelian == 0) j["n"] = l_n;
            out.emit(text, j);
            return 0;
        }

        if (euler->parsed()) {
            auto in = satake::load_euler_input(e_input);
            auto s = parse_complex(e_s);
            if (e_tol <= 0.0) throw satake::input_error("--tol must be positive");
            auto result = satake::factorization_check(in.primes, s, e_tol, &cache);
            json j = result.to_json();
            j["n"] = in.n;
            j["s"] = {{"re", s.real()}, {"im", s.imag()}};
            j["tol"] = e_tol;
            j["primes"] = in.primes.size();
            out.emit(result.to_text(), j);
            return 0;
        }

        if (cache_stats->parsed()) {
            auto st = cache.stats();
            json j{{"root", cache.root().string()}, {"files", st.files}, {"bytes", st.bytes}};
            out.emit("root: " + cache.root().string() + "\nfiles: " + std::to_string(st.files) +
                         "\nbytes: " + std::to_string(st.bytes) + "\n",
                     j);
            return 0;
        }
        if (cache_clear->parsed()) {
            auto removed = cache.clear();
            json j{{"root", cache.root().string()}, {"removed", removed}};
            out.emit("removed: " + std::to_string(removed) + "\n", j);
            return 0;
        }

        std::cerr << "no subcommand dispatched\n";
        return 2;
    } catch (const satake::internal_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const satake::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
