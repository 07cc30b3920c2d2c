#include <random>

#include "detvar/detvar.hpp"
#include "doctest.h"

using namespace detvar;

namespace {

Poly xy(const ZRing& r, bool x, int i) { return Poly::var(r.target, x ? r.target->x(i) : r.target->y(i)); }

Poly random_z(const ZRing& r, std::mt19937_64& rng, int terms, int deg) {
    std::uniform_int_distribution<int> var(0, r.space->nvars() - 1), coef(-3, 3);
    Poly out(r.space);
    for (int t = 0; t < terms; ++t) {
        Poly m = Poly::constant(r.space, coef(rng));
        for (int d = 0; d < deg; ++d) m = m * Poly::var(r.space, var(rng));
        out += m;
    }
    return out;
}

}  // namespace

TEST_CASE("phi_x and phi_y examples") {
    ZRing r = ZRing::pure(5, {1, 2}, {4, 5});
    CHECK(phi_x(r, r.z(4, 1)) == xy(r, true, 1) * xy(r, true, 4));
    CHECK(phi_x(r, r.z(4, 1) * r.z(5, 2) - r.z(4, 2) * r.z(5, 1)).is_zero());
    CHECK(phi_y(r, r.z(4, 1).pow(2)) == xy(r, false, 1).pow(2) * xy(r, false, 4).pow(2));
    CHECK_THROWS(phi_x(ZRing::extended_ring(5, {1, 2}, {4, 5}), r.z(4, 1)));
}

TEST_CASE("phi examples") {
    ZRing r = ZRing::extended_ring(5, {1, 2}, {4, 5});
    CHECK(phi(r, r.z(6, 1)) == xy(r, true, 1));
    CHECK(phi(r, r.z(4, 0)) == xy(r, false, 4));
    CHECK(phi(r, r.z(4, 1)) == xy(r, true, 1) * xy(r, true, 4) - xy(r, false, 1) * xy(r, false, 4));
    CHECK(r.z(6, 0).is_zero());
    CHECK(r.space->zvar(6, 0) == -1);
}

TEST_CASE("maps are ring homomorphisms") {
    std::mt19937_64 rng(3);
    ZRing p = ZRing::pure(6, {1, 2, 3}, {4, 5, 6});
    ZRing e = ZRing::extended_ring(6, {1, 2, 3}, {4, 5, 6});
    for (int it = 0; it < 20; ++it) {
        Poly a = random_z(p, rng, 3, 2), b = random_z(p, rng, 3, 1);
        CHECK(phi_x(p, a * b) == phi_x(p, a) * phi_x(p, b));
        CHECK(phi_y(p, a * b) == phi_y(p, a) * phi_y(p, b));
        Poly c = random_z(e, rng, 3, 2), d = random_z(e, rng, 2, 2);
        CHECK(phi(e, c * d) == phi(e, c) * phi(e, d));
        CHECK(phi(e, c + d) == phi(e, c) + phi(e, d));
    }
}

TEST_CASE("minor generators") {
    ZRing r = ZRing::pure(5, {1, 2}, {4, 5});
    auto m = minor_generators(r, 2, {4, 5}, {1, 2});
    REQUIRE(m.size() == 1);
    CHECK(m[0] == r.z(4, 1) * r.z(5, 2) - r.z(4, 2) * r.z(5, 1));

    ZRing big = ZRing::pure(8, {1, 2, 3, 4}, {5, 6, 7, 8});
    CHECK(minor_generators(big, 3, big.J3, big.J1).size() == 16);
    CHECK(minor_generators(big, 3, {5, 6}, big.J1).empty());

    for (const auto& g : minor_generators(big, 2, big.J3, big.J1)) CHECK(phi_x(big, g).is_zero());
    ZRing e = ZRing::extended_ring(6, {1, 2, 3}, {4, 5, 6});
    for (const auto& g : minor_generators(e, 3, e.rows(), e.cols())) CHECK(phi(e, g).is_zero());
}

TEST_CASE("3-chain detection") {
    CHECK(has_3chain({{5, 1}, {6, 2}, {7, 3}}));
    CHECK_FALSE(has_3chain({{7, 1}, {6, 2}, {5, 3}}));
    CHECK_FALSE(has_3chain({{5, 1}, {5, 2}, {6, 3}}));
    CHECK_FALSE(has_3chain({{5, 1}, {5, 1}, {5, 1}}));

    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> len(0, 10), coord(0, 5);
    for (int it = 0; it < 2000; ++it) {
        std::vector<std::pair<int, int>> p(static_cast<std::size_t>(len(rng)));
        for (auto& q : p) q = {coord(rng), coord(rng)};
        CHECK(has_3chain(p) == has_3chain_bruteforce(p));
    }
}

TEST_CASE("G-set enumeration") {
    ZRing r = ZRing::extended_ring(5, {1, 2}, {4, 5});
    auto one = enumerate_Gset(r, 1, 0, 0, {1}, {});
    REQUIRE(one.size() == 1);
    CHECK(one[0].poly == r.x(1));

    auto two = enumerate_Gset(r, 0, 0, 2, {1, 2}, {4, 5});
    REQUIRE(two.size() == 2);
    CHECK(two[0].poly == r.z(4, 1) * r.z(5, 2));
    CHECK(two[1].poly == r.z(4, 2) * r.z(5, 1));

    CHECK_THROWS(enumerate_Gset(r, 1, 0, 0, {1, 2}, {}));

    ZRing e = ZRing::extended_ring(6, {1, 2, 3}, {4, 5, 6});
    for (int k1 = 0; k1 <= 2; ++k1)
        for (int k2 = 0; k2 <= 2; ++k2)
            for (int k3 = 0; k3 <= 2; ++k3)
                for (const auto& I1 : multisets(e.J1, k1 + k3))
                    for (const auto& I3 : multisets(e.J3, k2 + k3))
                        for (const auto& g : enumerate_Gset(e, k1, k2, k3, I1, I3)) {
                            CHECK(g.I1() == I1);
                            CHECK(g.I3() == I3);
                            CHECK(std::is_sorted(g.xs.begin(), g.xs.end()));
                            CHECK(std::is_sorted(g.ys.begin(), g.ys.end()));
                            CHECK(std::is_sorted(g.zs.begin(), g.zs.end()));
                            CHECK_FALSE(has_3chain_bruteforce(g.I(e.n)));
                        }
}

TEST_CASE("kernel of phi_x is generated by 2-minors") {
    auto c = verify_phi_xy_kernel(5, {1, 2}, {4, 5}, 3);
    for (const auto& k : c) {
        CHECK(k.pass());
        if (k.degree <= 1) CHECK(k.kernel_dim == 0);
        if (k.degree == 2) CHECK(k.kernel_dim == 1);
    }
    for (const auto& k : verify_phi_xy_kernel(4, {1}, {2, 3, 4}, 4)) CHECK(k.kernel_dim == 0);
}

TEST_CASE("phi images of G-sets are independent") {
    for (const auto& g : verify_gset_rank(5, {1, 2}, {4, 5}, 3)) CHECK(g.pass());
}

TEST_CASE("kernel of phi is generated by 3-minors") {
    auto c = verify_phi_kernel(5, {1, 2}, {4, 5}, 3);
    for (const auto& k : c) {
        CHECK(k.pass());
        if (k.degree < 3) CHECK(k.kernel_dim == 0);
    }
    CHECK(c[3].kernel_dim == 1);  // the single 3-minor of the 3x3 extended matrix
}
