// series.hpp
// ----------
// Power series in one formal variable, truncated at order N, with
// LaurentPoly coefficients. coeffs always has length N+1; missing orders
// are explicit zero polynomials over the same coefficient variables.

#pragma once

#include <string>
#include <vector>

#include "satake/errors.hpp"
#include "satake/laurent.hpp"

namespace satake {

class TruncSeries {
public:
    TruncSeries(int order, std::string series_var, std::vector<std::string> coeff_vars)
        : order_(order), var_(std::move(series_var)), coeff_vars_(std::move(coeff_vars)) {
        if (order_ < 0) throw input_error("TruncSeries: negative truncation order");
        coeffs_.assign(static_cast<std::size_t>(order_) + 1, LaurentPoly(coeff_vars_));
    }

    static TruncSeries one(int order, std::string series_var, std::vector<std::string> coeff_vars) {
        TruncSeries s(order, std::move(series_var), std::move(coeff_vars));
        s.coeffs_[0] = LaurentPoly::constant(s.coeff_vars_, Rational(1));
        return s;
    }

    int order() const { return order_; }
    const std::string& series_var() const { return var_; }
    const std::vector<std::string>& coeff_vars() const { return coeff_vars_; }

    const LaurentPoly& at(int m) const {
        if (m < 0 || m > order_) throw input_error("TruncSeries: order out of range");
        return coeffs_[static_cast<std::size_t>(m)];
    }

    void set(int m, LaurentPoly p) {
        if (m < 0 || m > order_) throw input_error("TruncSeries: order out of range");
        if (p.vars() != coeff_vars_)
            throw variable_mismatch_error("TruncSeries: coefficient over wrong variable list");
        coeffs_[static_cast<std::size_t>(m)] = std::move(p);
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    // shrink or zero-extend
    TruncSeries truncated(int new_order) const {
        TruncSeries s(new_order, var_, coeff_vars_);
        for (int m = 0; m <= std::min(order_, new_order); ++m) s.coeffs_[m] = coeffs_[m];
        return s;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        require_compatible(a, b);
        TruncSeries r(a.order_, a.var_, a.coeff_vars_);
        for (int m = 0; m <= a.order_; ++m) r.coeffs_[m] = a.coeffs_[m] + b.coeffs_[m];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        require_compatible(a, b);
        TruncSeries r(a.order_, a.var_, a.coeff_vars_);
        for (int m = 0; m <= a.order_; ++m) r.coeffs_[m] = a.coeffs_[m] - b.coeffs_[m];
        return r;
    }

    // Cauchy product truncated at the common order.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        require_compatible(a, b);
        TruncSeries r(a.order_, a.var_, a.coeff_vars_);
        for (int i = 0; i <= a.order_; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.order_; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.order_ == b.order_ && a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

private:
    std::vector<LaurentPoly> coeffs_;
    int order_;
    std::string var_;
    std::vector<std::string> coeff_vars_;

    static void require_compatible(const TruncSeries& a, const TruncSeries& b) {
        if (a.var_ != b.var_ || a.coeff_vars_ != b.coeff_vars_)
            throw variable_mismatch_error("TruncSeries: operands over different variables");
        if (a.order_ != b.order_)
            throw order_mismatch_error("TruncSeries: operands of different truncation order");
    }
};

inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

// Multiplicative inverse mod x^{N+1}; the constant coefficient must be a
// nonzero rational constant.
inline TruncSeries series_inverse(const TruncSeries& s) {
    const LaurentPoly& c0 = s.at(0);
    if (!c0.is_constant() || c0.is_zero())
        throw non_unit_constant_error("series_inverse: constant term is not a unit rational");
    Rational inv0 = Rational(1) / c0.constant_value();
    TruncSeries t(s.order(), s.series_var(), s.coeff_vars());
    t.set(0, LaurentPoly::constant(s.coeff_vars(), inv0));
    for (int k = 1; k <= s.order(); ++k) {
        LaurentPoly acc(s.coeff_vars());
        for (int j = 1; j <= k; ++j) {
            if (s.at(j).is_zero() || t.at(k - j).is_zero()) continue;
            acc = acc + s.at(j) * t.at(k - j);
        }
        t.set(k, acc * (-inv0));
    }
    return t;
}

// Coefficient list [p0, p1, ...] viewed as a series truncated at `order`.
inline TruncSeries poly_to_series(const std::vector<LaurentPoly>& poly, int order,
                                  const std::string& series_var,
                                  const std::vector<std::string>& coeff_vars) {
    TruncSeries s(order, series_var, coeff_vars);
    for (std::size_t m = 0; m < poly.size() && m <= static_cast<std::size_t>(order); ++m)
        s.set(static_cast<int>(m), poly[m]);
    return s;
}

} // namespace satake
