#include <algorithm>
#include <random>

#include "doctest.h"
#include "exactpoly/echelon.hpp"
#include "exactpoly/poly.hpp"

using namespace exactpoly;

namespace {

struct XY3 {
    Space s = VarSpace::xy(3);
    Poly x(int i) const { return Poly::var(s, s->x(i)); }
    Poly y(int i) const { return Poly::var(s, s->y(i)); }
    Poly c(const Q& q) const { return Poly::constant(s, q); }
};

Poly random_poly(const Space& s, std::mt19937_64& rng, int terms, int maxdeg) {
    std::uniform_int_distribution<int> var(0, s->nvars() - 1), deg(0, maxdeg), coef(-5, 5), den(1, 3);
    PolyBuilder b(s);
    for (int t = 0; t < terms; ++t) {
        Mono m;
        int d = deg(rng);
        for (int k = 0; k < d; ++k) m.bump(static_cast<std::size_t>(var(rng)), 1);
        b.add(m, Q(coef(rng), den(rng)));
    }
    return b.finish();
}

// Dense rank over Q by plain Gaussian elimination.
std::size_t dense_rank(const std::vector<Poly>& ps) {
    std::vector<Mono> cols;
    for (const auto& p : ps)
        for (const auto& t : p.terms()) cols.push_back(t.first);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::vector<std::vector<Q>> a(ps.size(), std::vector<Q>(cols.size()));
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (const auto& t : ps[i].terms())
            a[i][static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), t.first) - cols.begin())] =
                t.second;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols.size() && rank < a.size(); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Q f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols.size(); ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("add examples") {
    XY3 r;
    CHECK((r.x(1) + (-r.x(1))).is_zero());
    CHECK((r.x(1) * r.x(2) + r.x(1) * r.x(2)) == r.x(1) * r.x(2) * Q(2));
    CHECK(((r.y(1) + r.x(1) * r.x(2) * r.y(2)) + (-r.y(1))) == r.x(1) * r.x(2) * r.y(2));
}

TEST_CASE("mul examples") {
    XY3 r;
    Poly p = r.x(1) * r.x(3) - r.y(1) * r.y(3);
    CHECK(p * r.c(1) == p);
    Poly sq = r.x(1).pow(2) * r.x(3).pow(2) - r.x(1) * r.x(3) * r.y(1) * r.y(3) * Q(2) + r.y(1).pow(2) * r.y(3).pow(2);
    CHECK(p * p == sq);
    CHECK((r.x(1) * r.y(1)).str() == "x1*y1");
}

TEST_CASE("diff examples") {
    XY3 r;
    CHECK((r.x(1).pow(2) * r.x(2)).diff(r.s->x(1)) == r.x(1) * r.x(2) * Q(2));
    CHECK((r.x(1) * r.x(2)).diff(r.s->y(2)).is_zero());
    CHECK((r.x(1) * r.y(1) + r.y(1).pow(2)).diff(r.s->y(1)) == r.x(1) + r.y(1) * Q(2));
    CHECK_THROWS(r.x(1).diff(99));
}

TEST_CASE("substitute examples") {
    XY3 r;
    Poly p = r.x(1) * r.x(3) - r.y(1) * r.y(3);
    std::map<int, Poly> a{{r.s->x(1), r.c(0)}, {r.s->y(1), r.c(1)}};
    CHECK(p.substitute(a, r.s) == -r.y(3));

    Space xs = VarSpace::xy(5);
    Space zs = VarSpace::z({4, 5}, {1, 2});
    auto z = [&](int j, int i) { return Poly::var(zs, zs->zvar(j, i)); };
    std::map<int, Poly> phix;
    for (int j : {4, 5})
        for (int i : {1, 2})
            phix.emplace(zs->zvar(j, i), Poly::var(xs, xs->x(i)) * Poly::var(xs, xs->x(j)));
    CHECK(z(4, 1).substitute(phix, xs).str() == "x1*x4");
    CHECK((z(4, 1) * z(5, 2) - z(4, 2) * z(5, 1)).substitute(phix, xs).is_zero());
}

TEST_CASE("canonical text") {
    XY3 r;
    Poly p = r.x(1).pow(2) * r.x(2) * r.y(3) * Q(-3, 2) + r.y(1);
    CHECK(p.str() == "-3/2*x1^2*x2*y3 + y1");
    CHECK(Poly(r.s).str() == "0");
    CHECK((r.c(2) - r.x(1)).str() == "-x1 + 2");
}

TEST_CASE("monomial order is graded lex with x1 largest") {
    XY3 r;
    CHECK(r.x(2).lead() < r.x(1).lead());
    CHECK(r.y(1).lead() < r.x(3).lead());
    CHECK(r.x(1).lead() < (r.y(3) * r.y(3)).lead());
}

TEST_CASE("echelon insert examples") {
    XY3 r;
    EchelonBasis b(r.s);
    CHECK(b.insert(r.x(1)));
    CHECK(b.dim() == 1);
    CHECK_FALSE(b.insert(r.x(1) * Q(2)));
    EchelonBasis c(r.s);
    CHECK(c.insert(r.x(1) + r.x(2)));
    CHECK(c.insert(r.x(1) - r.x(2)));
    CHECK_FALSE(c.insert(r.x(2)));
    CHECK(c.dim() == 2);
    CHECK(c.reduce(r.x(1) * Q(5, 3) + r.x(3)) == r.x(3));
}

TEST_CASE("kernel_of_map examples") {
    XY3 r;
    auto id = [](const Poly& p) { return p; };
    CHECK(kernel_of_map({r.x(1), r.x(2)}, id, r.s).dim() == 0);
    auto zero = [&](const Poly&) { return Poly(r.s); };
    CHECK(kernel_of_map({r.x(1), r.x(2), r.y(1)}, zero, r.s).dim() == 3);

    Space xs = VarSpace::xy(5);
    Space zs = VarSpace::z({4, 5}, {1, 2});
    std::map<int, Poly> phix;
    for (int v = 0; v < zs->nvars(); ++v) {
        auto [j, i] = zs->zpair(v);
        phix.emplace(v, Poly::var(xs, xs->x(i)) * Poly::var(xs, xs->x(j)));
    }
    std::vector<Poly> deg2;
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) deg2.push_back(Poly::var(zs, a) * Poly::var(zs, b));
    CHECK(deg2.size() == 10);
    auto ker = kernel_of_map(deg2, [&](const Poly& p) { return p.substitute(phix, xs); }, zs);
    REQUIRE(ker.dim() == 1);
    auto z = [&](int j, int i) { return Poly::var(zs, zs->zvar(j, i)); };
    CHECK(ker.contains(z(4, 1) * z(5, 2) - z(4, 2) * z(5, 1)));
}

TEST_CASE("ring axioms on random polynomials") {
    Space s = VarSpace::xy(3);
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        Poly p = random_poly(s, rng, 5, 3), q = random_poly(s, rng, 5, 3), w = random_poly(s, rng, 4, 2);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK(p * (q + w) == p * q + p * w);
        for (int u = 0; u < s->nvars(); ++u)
            for (int v = 0; v < s->nvars(); ++v) CHECK(p.diff(u).diff(v) == p.diff(v).diff(u));
    }
}

TEST_CASE("echelon determinism and dense rank agreement") {
    Space s = VarSpace::xy(3);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 25; ++it) {
        std::vector<Poly> ps;
        int count = 3 + it % 6;
        for (int i = 0; i < count; ++i) ps.push_back(random_poly(s, rng, 4, 2));
        // force dependencies
        ps.push_back(ps[0] * Q(3) - ps[1]);
        ps.push_back(ps[2] + ps[0] * Q(-1, 7));
        EchelonBasis a(s), b(s);
        for (const auto& p : ps) a.insert(p);
        auto shuffled = ps;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (const auto& p : shuffled) b.insert(p);
        CHECK(a.dim() == dense_rank(ps));
        auto ca = a.canonical_rows(), cb = b.canonical_rows();
        REQUIRE(ca.size() == cb.size());
        for (std::size_t i = 0; i < ca.size(); ++i) CHECK(ca[i] == cb[i]);
        Poly probe = random_poly(s, rng, 4, 2);
        auto with = ps;
        with.push_back(probe);
        CHECK(a.contains(probe) == (dense_rank(with) == dense_rank(ps)));
        CHECK(a.reduce(probe) == b.reduce(probe));
    }
}
