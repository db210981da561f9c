// Weyl character formula, Freudenthal oracle, dimension formula, cache.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "satake/characters.hpp"
#include "satake/root_system.hpp"

using namespace satake;

namespace {

Weight w8(std::vector<int> c) { return Weight(std::move(c)); }

LaurentPoly trace_character(int n) {
    // sum_i (a_i + a_i^-1) + 1 over a1..an
    LaurentPoly p = LaurentPoly::constant(satake_vars(n), Rational(1));
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        p.add_term(e, Rational(1));
        e[i] = -1;
        p.add_term(e, Rational(1));
    }
    return p;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double eval_at_ones(const LaurentPoly& p) {
    std::map<std::string, std::complex<double>> assign;
    for (const auto& v : p.vars()) assign[v] = {1.0, 0.0};
    return lp_eval_numeric(p, assign).real();
}

std::filesystem::path fresh_temp_dir(const char* tag) {
    auto p = std::filesystem::temp_directory_path() /
             (std::string("satake-test-") + tag + "-" + std::to_string(::getpid()));
    std::filesystem::remove_all(p);
    return p;
}

} // namespace

TEST_CASE("alternant: B1 spot values and antisymmetry degeneration") {
    RootDatum b1 = build_root_datum(CartanType::B, 1);
    LaurentPoly alt_rho = alternant(b1, b1.rho2); // rho2 = (1)
    LaurentPoly expected = LaurentPoly::monomial({"b1"}, {1}, Rational(1)) -
                           LaurentPoly::monomial({"b1"}, {-1}, Rational(1));
    CHECK(alt_rho == expected);

    for (int m = 0; m <= 3; ++m) {
        LaurentPoly alt = alternant(b1, w8({2 * m + 1}));
        LaurentPoly exp_m = LaurentPoly::monomial({"b1"}, {2 * m + 1}, Rational(1)) -
                            LaurentPoly::monomial({"b1"}, {-(2 * m + 1)}, Rational(1));
        CHECK(alt == exp_m);
    }

    // weights fixed by a reflection cancel to zero
    CHECK(alternant(b1, w8({0})).is_zero());
    RootDatum b2 = build_root_datum(CartanType::B, 2);
    CHECK(alternant(b2, w8({3, 3})).is_zero());
    CHECK(alternant(b2, w8({4, 0})).is_zero()); // fixed by sign flip of slot 2
}

TEST_CASE("alternant antisymmetry: alternant(w.u) == det(w) alternant(u)") {
    std::mt19937 rng(5);
    for (auto type : {CartanType::B, CartanType::A}) {
        RootDatum d = build_root_datum(type, type == CartanType::B ? 2 : 2);
        std::uniform_int_distribution<std::size_t> pick(0, d.weyl_elements.size() - 1);
        std::uniform_int_distribution<int> coord(-4, 4);
        for (int i = 0; i < 40; ++i) {
            const WeylElement& w = d.weyl_elements[pick(rng)];
            std::vector<int> c(d.dim);
            for (auto& x : c) x = coord(rng);
            Weight u(c);
            LaurentPoly lhs = alternant(d, weyl_apply(w, u));
            LaurentPoly rhs = alternant(d, u) * Rational(w.det);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("weyl_character: standard representation is the trace") {
    for (int n = 1; n <= 3; ++n) {
        RootDatum d = build_root_datum(CartanType::B, n);
        CHECK(weyl_character(d, first_fundamental_multiple2(1, n)) == trace_character(n));
    }
}

TEST_CASE("weyl_character: B1 at 2*omega1") {
    RootDatum b1 = build_root_datum(CartanType::B, 1);
    LaurentPoly chi = weyl_character(b1, w8({4}));
    LaurentPoly expected({"a1"});
    for (int e = -2; e <= 2; ++e) expected.add_term({e}, Rational(1));
    CHECK(chi == expected);
}

TEST_CASE("weyl_character: input validation") {
    RootDatum b2 = build_root_datum(CartanType::B, 2);
    CHECK_THROWS_AS(weyl_character(b2, w8({-2, 0})), not_dominant_error);
    CHECK_THROWS_AS(weyl_character(b2, w8({3, 1})), input_error); // half-integral (spin) weight
    CHECK(weyl_character(b2, w8({0, 0})) ==
          LaurentPoly::constant(satake_vars(2), Rational(1)));
}

TEST_CASE("weyl_dimension: SO(5), SO(7) spot values and the binomial difference") {
    RootDatum b2 = build_root_datum(CartanType::B, 2);
    RootDatum b3 = build_root_datum(CartanType::B, 3);
    CHECK(weyl_dimension(b2, first_fundamental_multiple2(1, 2)) == 5);
    CHECK(weyl_dimension(b3, first_fundamental_multiple2(1, 3)) == 7);
    CHECK(weyl_dimension(b2, first_fundamental_multiple2(2, 2)) == 14);
    CHECK(weyl_dimension(b2, first_fundamental_multiple2(3, 2)) == 30); // binom(7,3)-binom(5,1)

    for (int n = 1; n <= 3; ++n) {
        RootDatum d = build_root_datum(CartanType::B, n);
        for (int m = 0; m <= 6; ++m)
            CHECK(weyl_dimension(d, first_fundamental_multiple2(m, n)) ==
                  binom(2 * n + m, m) - binom(2 * n + m - 2, m - 2));
    }
}

TEST_CASE("character evaluated at all a_i = 1 equals the dimension") {
    for (int n = 1; n <= 3; ++n) {
        RootDatum d = build_root_datum(CartanType::B, n);
        for (int m = 0; m <= 6; ++m) {
            Weight lambda2 = first_fundamental_multiple2(m, n);
            double v = eval_at_ones(weyl_character(d, lambda2));
            CHECK(v == doctest::Approx(static_cast<double>(weyl_dimension(d, lambda2))));
        }
    }
    // the B2 value 14 doubles as the lp_eval spot check
    RootDatum b2 = build_root_datum(CartanType::B, 2);
    CHECK(eval_at_ones(weyl_character(b2, w8({4, 0}))) == doctest::Approx(14.0));
}

TEST_CASE("character_oracle agrees with the alternant route") {
    RootDatum b1 = build_root_datum(CartanType::B, 1);
    LaurentPoly chi1 = character_oracle(b1, first_fundamental_multiple2(1, 1));
    LaurentPoly expectedt({"a1"});
    for (int e = -1; e <= 1; ++e) expectedt.add_term({e}, Rational(1));
    CHECK(chi1 == expectedt);

    RootDatum b2 = build_root_datum(CartanType::B, 2);
    CHECK(character_oracle(b2, first_fundamental_multiple2(1, 2)) == trace_character(2));
    CHECK(character_oracle(b2, first_fundamental_multiple2(2, 2)) ==
          weyl_character(b2, first_fundamental_multiple2(2, 2)));

    for (int m = 0; m <= 6; ++m)
        CHECK(character_oracle(b1, first_fundamental_multiple2(m, 1)) ==
              weyl_character(b1, first_fundamental_multiple2(m, 1)));
    for (int m = 0; m <= 4; ++m)
        CHECK(character_oracle(b2, first_fundamental_multiple2(m, 2)) ==
              weyl_character(b2, first_fundamental_multiple2(m, 2)));
    // a two-row weight as well
    CHECK(character_oracle(b2, w8({4, 2})) == weyl_character(b2, w8({4, 2})));
}

TEST_CASE("character_oracle budget") {
    RootDatum b3 = build_root_datum(CartanType::B, 3);
    CHECK_THROWS_AS(character_oracle(b3, first_fundamental_multiple2(1, 3)),
                    oracle_budget_error);
    RootDatum b1 = build_root_datum(CartanType::B, 1);
    CHECK_THROWS_AS(character_oracle(b1, first_fundamental_multiple2(7, 1)),
                    oracle_budget_error);
}

TEST_CASE("hom_sym spot values") {
    CHECK(hom_sym(3, 0) == LaurentPoly::constant(satake_vars(3), Rational(1)));
    LaurentPoly h2({"a1", "a2"});
    h2.add_term({2, 0}, Rational(1));
    h2.add_term({1, 1}, Rational(1));
    h2.add_term({0, 2}, Rational(1));
    CHECK(hom_sym(2, 2) == h2);
    LaurentPoly h1(satake_vars(4));
    for (int i = 0; i < 4; ++i) {
        std::vector<int> e(4, 0);
        e[i] = 1;
        h1.add_term(e, Rational(1));
    }
    CHECK(hom_sym(4, 1) == h1);
    CHECK_THROWS_AS(hom_sym(2, -1), negative_degree_error);
}

TEST_CASE("one-row characters of GL_n are complete homogeneous sums") {
    for (int n = 1; n <= 3; ++n) {
        RootDatum a = build_root_datum(CartanType::A, n - 1);
        for (int m = 0; m <= 4; ++m)
            CHECK(weyl_character(a, first_fundamental_multiple2(m, n)) == hom_sym(n, m));
    }
    // a GL_2 weight with a negative entry: dual standard
    RootDatum a1 = build_root_datum(CartanType::A, 1);
    LaurentPoly dual({"a1", "a2"});
    dual.add_term({-1, 0}, Rational(1));
    dual.add_term({0, -1}, Rational(1));
    CHECK(weyl_character(a1, w8({0, -2})) == dual);
}

TEST_CASE("weyl_character is Weyl-invariant and has non-negative integer coefficients") {
    RootDatum b2 = build_root_datum(CartanType::B, 2);
    for (const auto& lambda : {w8({2, 0}), w8({4, 2}), w8({6, 2}), w8({4, 4})}) {
        LaurentPoly chi = weyl_character(b2, lambda);
        for (const auto& w : b2.weyl_elements)
            CHECK(substitute_signed_permutation(chi, w.perm, w.sign) == chi);
        for (const auto& [e, c] : chi.terms()) {
            (void)e;
            CHECK(c.is_integer());
            CHECK(c.signum() > 0);
        }
    }
    RootDatum b3 = build_root_datum(CartanType::B, 3);
    LaurentPoly chi3 = weyl_character(b3, first_fundamental_multiple2(3, 3));
    for (const auto& w : b3.weyl_elements)
        CHECK(substitute_signed_permutation(chi3, w.perm, w.sign) == chi3);
}

TEST_CASE("character cache: hit, byte stability, corruption recovery") {
    namespace fs = std::filesystem;
    fs::path root = fresh_temp_dir("cache");
    CharacterCache cache(root);
    RootDatum b2 = build_root_datum(CartanType::B, 2);
    Weight lambda2 = w8({4, 0});

    CHECK(cache.stats().files == 0);
    LaurentPoly cold = weyl_character(b2, lambda2, &cache);
    CHECK(cache.stats().files == 1);

    // locate the cache file and snapshot its bytes
    fs::path file;
    for (const auto& e : fs::recursive_directory_iterator(root))
        if (e.is_regular_file() && e.path().extension() == ".lp") file = e.path();
    REQUIRE(!file.empty());
    CHECK(file.parent_path().filename() == "B2");
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    };
    std::string bytes1 = slurp(file);
    CHECK(bytes1.rfind(CharacterCache::schema_version_line, 0) == 0);
    CHECK(bytes1.find("key: B 2 4 0") != std::string::npos);

    LaurentPoly warm = weyl_character(b2, lambda2, &cache);
    CHECK(warm == cold);
    CHECK(slurp(file) == bytes1);
    CHECK(cache.stats().files == 1);

    // a corrupt file is a miss: result still correct, file rewritten
    {
        std::ofstream out(file, std::ios::binary | std::ios::trunc);
        out << "garbage\n";
    }
    LaurentPoly recovered = weyl_character(b2, lambda2, &cache);
    CHECK(recovered == cold);
    CHECK(slurp(file) == bytes1);

    CHECK(cache.clear() > 0);
    CHECK(cache.stats().files == 0);
    fs::remove_all(root);
}

TEST_CASE("cache survives concurrent readers and writers") {
    namespace fs = std::filesystem;
    fs::path root = fresh_temp_dir("mt");
    CharacterCache cache(root);
    RootDatum b2 = build_root_datum(CartanType::B, 2);

    std::vector<LaurentPoly> baseline;
    for (int m = 0; m <= 5; ++m)
        baseline.push_back(weyl_character(b2, first_fundamental_multiple2(m, 2)));

    std::vector<std::vector<LaurentPoly>> results(4);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&, t] {
            for (int round = 0; round < 3; ++round)
                for (int m = 0; m <= 5; ++m) {
                    LaurentPoly chi =
                        weyl_character(b2, first_fundamental_multiple2(m, 2), &cache);
                    if (round == 2) results[t].push_back(chi);
                }
        });
    for (auto& th : threads) th.join();
    for (const auto& r : results) {
        REQUIRE(r.size() == baseline.size());
        for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i] == baseline[i]);
    }
    CHECK(cache.stats().files == 6);
    fs::remove_all(root);
}

TEST_CASE("disabled cache computes without touching disk") {
    CharacterCache off;
    CHECK(!off.enabled());
    RootDatum b1 = build_root_datum(CartanType::B, 1);
    CHECK(weyl_character(b1, w8({2}), &off) == weyl_character(b1, w8({2})));
    CHECK(off.stats().files == 0);
}
