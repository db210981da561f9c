// laurent.hpp
// -----------
// Exact multivariate Laurent polynomials over Rational: a finite map from
// integer exponent vectors (negative exponents allowed, one slot per named
// variable) to nonzero coefficients.
//
// Invariants kept by every operation:
//   * no stored coefficient is zero;
//   * every exponent vector has length == number of variables;
//   * term iteration (and serialization) is lexicographic on exponent
//     vectors, ascending — std::map supplies exactly that order.
//
// Serialization format (LF line endings, bit-exact roundtrip):
//   vars: a1 a2
//   -1 0 : 3/2
//   0 1 : -1/1

#pragma once

#include <complex>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "satake/errors.hpp"
#include "satake/rational.hpp"

namespace satake {

class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    LaurentPoly() = default;

    explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
        validate_var_names(vars_);
    }

    static LaurentPoly constant(std::vector<std::string> vars, Rational c) {
        LaurentPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), std::move(c));
        return p;
    }

    static LaurentPoly monomial(std::vector<std::string> vars, Exponents exps, Rational c) {
        LaurentPoly p(std::move(vars));
        if (exps.size() != p.vars_.size())
            throw variable_mismatch_error("LaurentPoly: exponent vector length != variable count");
        if (!c.is_zero()) p.terms_.emplace(std::move(exps), std::move(c));
        return p;
    }

    // x_name^power over the given variable list
    static LaurentPoly variable(std::vector<std::string> vars, const std::string& name,
                                int power = 1) {
        LaurentPoly p(vars);
        Exponents e(vars.size(), 0);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i] == name) {
                e[i] = power;
                return monomial(std::move(vars), std::move(e), Rational(1));
            }
        }
        throw variable_mismatch_error("LaurentPoly: unknown variable '" + name + "'");
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exponents(vars_.size(), 0));
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw internal_error("LaurentPoly: not a constant");
        return terms_.begin()->second;
    }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Accumulating builder; prunes on cancellation.
    void add_term(const Exponents& e, const Rational& c) {
        if (e.size() != vars_.size())
            throw variable_mismatch_error("LaurentPoly: exponent vector length != variable count");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        require_same_vars(a, b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        require_same_vars(a, b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        require_same_vars(a, b);
        LaurentPoly r(a.vars_);
        if (a.terms_.empty() || b.terms_.empty()) return r;
        // iterate the smaller factor outside
        const LaurentPoly& outer = a.terms_.size() <= b.terms_.size() ? a : b;
        const LaurentPoly& inner = a.terms_.size() <= b.terms_.size() ? b : a;
        Exponents e(a.vars_.size());
        for (const auto& [eo, co] : outer.terms_) {
            for (const auto& [ei, ci] : inner.terms_) {
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = eo[k] + ei[k];
                r.add_term(e, co * ci);
            }
        }
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const Rational& s) {
        LaurentPoly r(a.vars_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
        return r;
    }
    friend LaurentPoly operator*(const Rational& s, const LaurentPoly& a) { return a * s; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        // human order: lex-descending
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            Rational a = c.signum() < 0 ? -c : c;
            if (first) {
                if (c.signum() < 0) out << "-";
                first = false;
            } else {
                out << (c.signum() < 0 ? " - " : " + ");
            }
            std::string mono = monomial_string(it->first);
            if (mono.empty()) {
                out << a.pretty();
            } else if (a.is_one()) {
                out << mono;
            } else {
                out << a.pretty() << "*" << mono;
            }
        }
        return out.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
        return os << p.to_string();
    }

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    static void validate_var_names(const std::vector<std::string>& vars) {
        for (const auto& v : vars) {
            if (v.empty()) throw input_error("LaurentPoly: empty variable name");
            for (char ch : v)
                if (ch == ' ' || ch == '\t' || ch == '\n' || ch == ':')
                    throw input_error("LaurentPoly: variable name '" + v + "' has reserved chars");
        }
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j])
                    throw input_error("LaurentPoly: duplicate variable '" + vars[i] + "'");
    }

    static void require_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.vars_ != b.vars_)
            throw variable_mismatch_error("LaurentPoly: operands over different variable lists");
    }

    std::string monomial_string(const Exponents& e) const {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars_[i];
            if (e[i] != 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    }

};

inline LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

// Exact division in the Laurent ring by lex leading-term elimination.
// Quotient exponents are confined to the Minkowski-difference box of the
// supports (Newton polytopes add under multiplication, without
// cancellation at vertices), which both detects non-divisibility and
// bounds the loop.
inline LaurentPoly lp_exact_div(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw input_error("lp_exact_div: division by zero polynomial");
    if (p.vars() != d.vars())
        throw variable_mismatch_error("lp_exact_div: operands over different variable lists");
    const std::size_t nv = p.vars().size();
    LaurentPoly q(p.vars());
    if (p.is_zero()) return q;

    std::vector<int> lo(nv), hi(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        int pmin = 0, pmax = 0, dmin = 0, dmax = 0;
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            (void)c;
            if (first || e[i] < pmin) pmin = e[i];
            if (first || e[i] > pmax) pmax = e[i];
            first = false;
        }
        first = true;
        for (const auto& [e, c] : d.terms()) {
            (void)c;
            if (first || e[i] < dmin) dmin = e[i];
            if (first || e[i] > dmax) dmax = e[i];
            first = false;
        }
        lo[i] = pmin - dmax;
        hi[i] = pmax - dmin;
    }

    LaurentPoly r = p;
    const auto dlead = *d.terms().rbegin();
    LaurentPoly::Exponents te(nv);
    while (!r.is_zero()) {
        // copy: the subtraction below erases this term from r
        const auto rlead = *r.terms().rbegin();
        bool in_box = true;
        for (std::size_t i = 0; i < nv; ++i) {
            te[i] = rlead.first[i] - dlead.first[i];
            if (te[i] < lo[i] || te[i] > hi[i]) in_box = false;
        }
        if (!in_box) throw not_divisible_error("lp_exact_div: no exact quotient");
        Rational tc = rlead.second / dlead.second;
        q.add_term(te, tc);
        // r -= t * d
        LaurentPoly::Exponents e(nv);
        for (const auto& [ed, cd] : d.terms()) {
            for (std::size_t i = 0; i < nv; ++i) e[i] = te[i] + ed[i];
            r.add_term(e, -(tc * cd));
        }
    }
    return q;
}

// Exact-rational coefficients evaluated in floating point; plain term
// summation is fine at desk scale.
inline std::complex<double> lp_eval_numeric(
    const LaurentPoly& p, const std::map<std::string, std::complex<double>>& assignment) {
    const auto& vars = p.vars();
    std::vector<std::complex<double>> vals(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = assignment.find(vars[i]);
        if (it == assignment.end())
            throw unassigned_variable_error("lp_eval_numeric: variable '" + vars[i] +
                                            "' not assigned");
        vals[i] = it->second;
    }
    auto int_pow = [](std::complex<double> z, int e) {
        bool inv = e < 0;
        unsigned long long n = inv ? -(long long)e : (long long)e;
        std::complex<double> acc(1.0, 0.0);
        std::complex<double> base = z;
        while (n) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return inv ? 1.0 / acc : acc;
    };
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [e, c] : p.terms()) {
        std::complex<double> term(c.to_double(), 0.0);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0 && vals[i] == std::complex<double>(0.0, 0.0))
                throw zero_to_negative_power_error("lp_eval_numeric: variable '" + vars[i] +
                                                   "' is 0 but appears with negative exponent");
            term *= int_pow(vals[i], e[i]);
        }
        sum += term;
    }
    return sum;
}

inline std::string serialize(const LaurentPoly& p) {
    std::string out = "vars:";
    for (const auto& v : p.vars()) out += " " + v;
    out += "\n";
    for (const auto& [e, c] : p.terms()) {
        std::string line;
        for (int x : e) line += std::to_string(x) + " ";
        line += ": " + c.to_string();
        out += line + "\n";
    }
    return out;
}

inline LaurentPoly parse_laurent(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("vars:", 0) != 0)
        throw parse_error("parse_laurent: missing 'vars:' header");
    std::istringstream hdr(line.substr(5));
    std::vector<std::string> vars;
    for (std::string v; hdr >> v;) vars.push_back(v);
    LaurentPoly p(vars);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        LaurentPoly::Exponents e(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (!(ls >> e[i])) throw parse_error("parse_laurent: bad exponent line: " + line);
        std::string colon, coeff;
        if (!(ls >> colon >> coeff) || colon != ":")
            throw parse_error("parse_laurent: bad term line: " + line);
        std::string extra;
        if (ls >> extra) throw parse_error("parse_laurent: trailing tokens: " + line);
        Rational c = Rational::parse(coeff);
        if (c.is_zero()) throw parse_error("parse_laurent: explicit zero coefficient");
        if (!p.coeff(e).is_zero()) throw parse_error("parse_laurent: duplicate exponent vector");
        p.add_term(e, c);
    }
    return p;
}

// Embed into a superset variable list (by name); new slots get exponent 0.
inline LaurentPoly with_variables(const LaurentPoly& p, std::vector<std::string> new_vars) {
    std::vector<std::size_t> slot(p.vars().size());
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < new_vars.size(); ++j) {
            if (new_vars[j] == p.vars()[i]) {
                slot[i] = j;
                found = true;
                break;
            }
        }
        if (!found)
            throw variable_mismatch_error("with_variables: '" + p.vars()[i] +
                                          "' missing from target list");
    }
    LaurentPoly r(std::move(new_vars));
    LaurentPoly::Exponents e(r.vars().size());
    for (const auto& [old_e, c] : p.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < old_e.size(); ++i) e[slot[i]] = old_e[i];
        r.add_term(e, c);
    }
    return r;
}

// Signed-permutation substitution on the variables, realized as the
// exponent remap new_e[i] = sign[i] * e[perm[i]]. Used for Weyl-invariance
// checks.
inline LaurentPoly substitute_signed_permutation(const LaurentPoly& p,
                                                 const std::vector<int>& perm,
                                                 const std::vector<int>& sign) {
    if (perm.size() != p.vars().size() || sign.size() != p.vars().size())
        throw variable_mismatch_error("substitute_signed_permutation: size mismatch");
    LaurentPoly r(p.vars());
    LaurentPoly::Exponents e(p.vars().size());
    for (const auto& [old_e, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = sign[i] * old_e[perm[i]];
        r.add_term(e, c);
    }
    return r;
}

} // namespace satake
