#include <random>

#include "annihilator/annihilator.hpp"
#include "doctest.h"

using namespace annihilator;

namespace {

SymElement E(int n, int j, int i) { return symbol(n, Generator::root(j, i)); }

bool all_zero(const std::vector<Poly>& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("degree-1 annihilator of the smallest example") {
    Config c{3, 1, 2, -1, -1};
    Tower t = filtration::bruteforce_tower(c, 4);
    auto r = verify_I1(t, 4);
    CHECK(r.piece.basis.size() == 5);
    CHECK(r.cartan_dim == 2);
    CHECK(r.root_dim == 3);
    CHECK(r.expected_roots == 3);
    CHECK(r.exact);
    CHECK(r.piece.stabilized);

    CHECK(all_zero(act(t, E(3, 1, 2), 1)));
    CHECK_FALSE(all_zero(act(t, E(3, 2, 1), 1)));
    CHECK_THROWS(act(t, E(3, 2, 1), 5));
}

TEST_CASE("L pairs") {
    Config c{6, 2, 4, -1, -1};
    auto L = L_pairs(c);
    CHECK(L.size() == 4 + 4 + 4);
    CHECK(in_L(c, 3, 1));
    CHECK(in_L(c, 5, 3));
    CHECK(in_L(c, 6, 2));
    CHECK_FALSE(in_L(c, 1, 3));
    CHECK_FALSE(in_L(c, 3, 4));
    CHECK(project_L(c, E(6, 5, 1) * E(6, 1, 5) + E(6, 5, 1)) == E(6, 5, 1));
}

TEST_CASE("delta operators") {
    Config c{6, 2, 4, -1, -1};
    CHECK(delta_ops(c, DeltaFamily::Minor3).size() == 16);
    auto l1 = delta_ops(c, DeltaFamily::MinorL1);
    REQUIRE(l1.size() == 1);
    CHECK(l1[0].rows == std::vector<int>{3, 4});
    CHECK(l1[0].cols == std::vector<int>{1, 2});
    CHECK(l1[0].sym(c, false) == E(6, 3, 1) * E(6, 4, 2) - E(6, 3, 2) * E(6, 4, 1));
    auto l2 = delta_ops(c, DeltaFamily::MinorL2);
    REQUIRE(l2.size() == 1);
    CHECK(l2[0].str() == "Delta^{5,6}_{3,4}");

    // the six-term alternation, written out
    DeltaOp d{{4, 5, 6}, {1, 2, 3}};
    auto w = d.word_form();
    REQUIRE(w.size() == 6);
    auto term = [](int a, int b, int cc, int e, int f, int g) {
        return std::vector<Generator>{Generator::root(a, b), Generator::root(cc, e), Generator::root(f, g)};
    };
    std::vector<std::pair<int, std::vector<Generator>>> expected = {
        {1, term(4, 1, 5, 2, 6, 3)},  {-1, term(4, 1, 5, 3, 6, 2)}, {-1, term(4, 2, 5, 1, 6, 3)},
        {1, term(4, 2, 5, 3, 6, 1)},  {1, term(4, 3, 5, 1, 6, 2)},  {-1, term(4, 3, 5, 2, 6, 1)}};
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(w[k].coef == expected[k].first);
        CHECK(w[k].factors == expected[k].second);
    }

    DeltaOp diag{{3, 4, 5}, {1, 2, 3}};
    CHECK_THROWS(diag.sym(c, false));
    CHECK_FALSE(diag.sym(c, true).is_zero());
}

TEST_CASE("factor order does not matter modulo the lower level") {
    Config c{4, 1, 3, -1, -1};
    Tower t = filtration::bruteforce_tower(c, 4);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(0, c.n * c.n - 2);
    for (int it = 0; it < 40; ++it) {
        const int p = it < 20 ? 2 : 3;
        SymElement e = Poly::constant(sym_space(c.n), 1);
        for (int f = 0; f < p; ++f) e = e * symbol(c.n, oscrep::generator_at(c.n, pick(rng)));
        auto a = words_of(c.n, e);
        auto b = words_of_permuted(c.n, e, 1 + static_cast<unsigned>(it % 5));
        for (int k = 0; k + p - 1 <= t.depth(); ++k)
            for (const auto& v : t.span.level_rows(k))
                CHECK(t.span.reduce(apply(c, a, v), k + p - 1) == t.span.reduce(apply(c, b, v), k + p - 1));
    }
}

TEST_CASE("degree-2 annihilator with both minor families") {
    Config c{6, 2, 4, -1, -1};
    auto r = verify_I2(c, 3);
    CHECK(r.pass());
    for (const auto& ch : r.checks) CHECK_MESSAGE(ch.pass, ch.name << ": " << ch.detail);

    Tower t = filtration::bruteforce_tower(c, 3);
    auto d = delta_ops(c, DeltaFamily::MinorL1)[0];
    CHECK(maps_into(t, d.word_form(), 2, 1));
    CHECK_FALSE(maps_into(t, d.word_form(), 2, 0));

    // every computed element maps M_k into M_{k+1} without reduction
    auto piece = compute_Ip_L(t, 2, 3);
    CHECK(piece.basis.size() == 2);
    for (const auto& e : piece.basis) CHECK(maps_into(t, words_of(c.n, e), 2, 1));
}

TEST_CASE("mixed signs keep one minor family") {
    auto a = verify_I2(Config{5, 1, 3, 1, -1}, 3);
    CHECK(a.pass());
    bool saw_power = false;
    for (const auto& ch : a.checks) saw_power = saw_power || ch.name.find(")^2 in I_(4)") != std::string::npos;
    CHECK(saw_power);
    CHECK(verify_I2(Config{4, 1, 3, -1, 1}, 3).pass());
    CHECK_THROWS(verify_I2(Config{3, 2, 3, 2, 1}, 3));
}

TEST_CASE("3x3 alternations") {
    auto zero = alternation_zero_identity(Config{6, 2, 3, -1, -1}, 4);
    CHECK(zero.pass);
    CHECK(zero.detail.find("1 operators") != std::string::npos);
    CHECK(alternation_zero_identity(Config{6, 2, 4, -1, -1}, 4).detail.find("vacuous") != std::string::npos);

    auto cases = alternation_cases(Config{6, 2, 4, -1, -1}, 2);
    CHECK(cases.size() == 4);
    for (const auto& ch : cases) CHECK_MESSAGE(ch.pass, ch.name << ": " << ch.detail);

    auto ex = I3_exactness(Config{5, 2, 3, -1, -1}, 5);
    CHECK_MESSAGE(ex.pass, ex.detail);
}

TEST_CASE("main theorem reports") {
    auto r = verify_main_theorem(Config{4, 2, 2, -1, -1}, 4);
    CHECK(r.pass());
    CHECK(r.branch.rfind("n1=n2", 0) == 0);
    auto s = verify_main_theorem(Config{3, 2, 3, 2, 1}, 4);
    CHECK(s.pass());
    CHECK(s.branch.find("I2(J2,J1)") != std::string::npos);
    CHECK_THROWS(verify_main_theorem(Config{4, 1, 2, 1, 1}, 3));
}

TEST_CASE("growth degree") {
    std::vector<std::size_t> cubic, flat(8, 5), linear;
    for (std::size_t k = 0; k < 9; ++k) {
        cubic.push_back((k + 1) * (k + 2) * (k + 3) / 6);
        linear.push_back(2 * k + 7);
    }
    auto g = gkdim_estimate(cubic);
    CHECK(g.d == 3);
    CHECK(g.confident);
    CHECK(gkdim_estimate(flat).d == 0);
    CHECK(gkdim_estimate(linear).d == 1);
    CHECK_THROWS(gkdim_estimate({1, 2, 3}));

    std::vector<std::size_t> late{1, 3, 6, 10, 15, 21, 27};  // one trailing zero only
    auto l = gkdim_estimate(late);
    CHECK(l.d == 1);
    CHECK(l.trailing_zeros == 1);
    CHECK_FALSE(l.confident);

    CHECK(gk_expected(Config{3, 1, 2, -1, -1}) == 3);
    CHECK(gk_expected(Config{4, 2, 2, -1, -1}) == 4);
    CHECK(gk_expected(Config{3, 1, 3, 2, 1}) == 2);
    CHECK(gk_expected(Config{4, 1, 1, -1, -1}) == 3);
    CHECK(gk_expected(Config{4, 3, 3, -1, -1}) == 3);
}
