// whittaker.hpp
// -------------
// Unramified (spherical) Whittaker values on torus cocharacters via the
// Casselman-Shalika recipe: supported on dominant cocharacters, where the
// value is delta_B^(1/2) times the dual-group character at the Satake
// parameters. The group/dual pairing is hard-wired to what this library
// needs: Sp_{2n} -> B_n (SO_{2n+1}) and GL_n -> A_{n-1}.

#pragma once

#include <string>

#include "satake/characters.hpp"
#include "satake/errors.hpp"
#include "satake/root_system.hpp"

namespace satake {

enum class Group { Sp2n, GLn };

// Value carries u^{q_exponent2} with u = q^(1/2), i.e. q^{q_exponent2/2},
// times char_part in the Satake variables.
struct WhittakerValue {
    int q_exponent2 = 0;
    LaurentPoly char_part;
    bool is_zero = false;

    static WhittakerValue zero(int dim) {
        WhittakerValue v;
        v.char_part = LaurentPoly(satake_vars(dim));
        v.is_zero = true;
        return v;
    }

    std::string to_string() const {
        if (is_zero) return "0";
        std::string s;
        if (q_exponent2 != 0) {
            s += "q^";
            if (q_exponent2 % 2 == 0) {
                s += std::to_string(q_exponent2 / 2);
            } else {
                s += "(" + std::to_string(q_exponent2) + "/2)";
            }
            s += " * ";
        }
        return s + "(" + char_part.to_string() + ")";
    }
};

// 2<rho_group, coweight>, the doubled exponent of the half-modulus
// character: delta_B^(1/2)(pi^lambda) = q^(-<rho, lambda>). Kept doubled
// so type A's half-integral shifts stay in integers.
inline int modulus_half_exponent2(const RootDatum& group_datum, const Weight& coweight2) {
    long long p = pairing2(group_datum.rho2, coweight2);
    if (p % 2 != 0)
        throw internal_error("modulus_half_exponent2: odd pairing for an even coweight");
    return static_cast<int>(p / 2);
}

inline RootDatum group_root_datum(Group g, int n) {
    if (n < 1) throw unsupported_rank_error("group_root_datum: n must be >= 1");
    return g == Group::Sp2n ? build_root_datum(CartanType::C, n)
                            : build_root_datum(CartanType::A, n - 1);
}

inline RootDatum dual_root_datum(Group g, int n) {
    if (n < 1) throw unsupported_rank_error("dual_root_datum: n must be >= 1");
    return g == Group::Sp2n ? build_root_datum(CartanType::B, n)
                            : build_root_datum(CartanType::A, n - 1);
}

inline WhittakerValue cs_whittaker_value(Group g, int n, const Weight& lambda2,
                                         const CharacterCache* cache = nullptr) {
    RootDatum group = group_root_datum(g, n);
    if (static_cast<int>(lambda2.size()) != group.dim)
        throw variable_mismatch_error("cs_whittaker_value: coweight length != torus rank");
    if (!lambda2.is_even())
        throw input_error("cs_whittaker_value: cocharacters must have integer coordinates");
    if (!is_dominant(group, lambda2)) return WhittakerValue::zero(group.dim);

    WhittakerValue v;
    v.q_exponent2 = -modulus_half_exponent2(group, lambda2);
    v.char_part = weyl_character(dual_root_datum(g, n), lambda2, cache);
    return v;
}

} // namespace satake
