#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exactpoly/echelon.hpp"
#include "exactpoly/poly.hpp"

namespace detvar {

using exactpoly::Poly;
using exactpoly::Q;
using exactpoly::Space;

// z-variable ring over rows J3 and columns J1. The extended ring adds row n+1
// (z_{n+1,i} plays x_i) and column 0 (z_{j,0} plays y_j), never z_{n+1,0}.
struct ZRing {
    int n = 0;
    std::vector<int> J1, J3;
    bool extended = false;
    Space space;   // the z ring
    Space target;  // XY(n)

    static ZRing pure(int n, std::vector<int> J1, std::vector<int> J3);
    static ZRing extended_ring(int n, std::vector<int> J1, std::vector<int> J3);

    std::vector<int> rows() const;  // J3, or J3 and n+1
    std::vector<int> cols() const;  // J1, or 0 and J1
    // z_{j,i}; zero for the missing entry (n+1, 0).
    Poly z(int j, int i) const;
    Poly x(int i) const { return z(n + 1, i); }
    Poly y(int j) const { return z(j, 0); }
    std::vector<exactpoly::Mono> monomials(int degree) const;
};

// z_{j,i} -> x_i x_j and z_{j,i} -> y_i y_j; throw on the extended ring.
Poly phi_x(const ZRing& r, const Poly& p);
Poly phi_y(const ZRing& r, const Poly& p);
// z_{j,i} -> x_i x_j - y_i y_j, z_{n+1,i} -> x_i, z_{j,0} -> y_j.
Poly phi(const ZRing& r, const Poly& p);

// All t x t minors of (z_{j,i}), j in rows, i in cols; lex order on (row subset, column subset).
std::vector<Poly> minor_generators(const ZRing& r, int t, const std::vector<int>& rows, const std::vector<int>& cols);
// Degree-d piece of the ideal generated by gens (homogeneous of degree t each).
exactpoly::EchelonBasis ideal_piece(const ZRing& r, const std::vector<Poly>& gens, int gen_degree, int d);

// Pairs are (j, i). A 3-chain is a triple strictly increasing in both coordinates.
bool has_3chain(const std::vector<std::pair<int, int>>& pairs);
bool has_3chain_bruteforce(const std::vector<std::pair<int, int>>& pairs);

struct IndexedMonomial {
    std::vector<int> xs;                    // sorted
    std::vector<int> ys;                    // sorted
    std::vector<std::pair<int, int>> zs;    // (j, i), lexicographically sorted
    Poly poly;                              // in the extended ring

    std::vector<int> I1() const;            // xs and column indices of zs, sorted
    std::vector<int> I3() const;            // ys and row indices of zs, sorted
    std::vector<std::pair<int, int>> I(int n) const;
};

// G-set for prescribed index multisets; throws on size mismatch.
std::vector<IndexedMonomial> enumerate_Gset(const ZRing& r, int k1, int k2, int k3, std::vector<int> I1,
                                            std::vector<int> I3);

struct KernelComparison {
    std::string map;
    int degree = 0;
    std::size_t kernel_dim = 0, ideal_dim = 0;
    bool kernel_in_ideal = false, ideal_in_kernel = false;
    bool pass() const { return kernel_in_ideal && ideal_in_kernel; }
};

struct GsetCheck {
    int k1 = 0, k2 = 0, k3 = 0;
    std::vector<int> I1, I3;
    std::size_t size = 0, rank = 0;
    bool pass() const { return size == rank; }
};

// ker phi_x = ker phi_y = (R_2) in degrees 0..rmax.
std::vector<KernelComparison> verify_phi_xy_kernel(int n, const std::vector<int>& J1, const std::vector<int>& J3, int rmax);
// rank phi(G) = |G| for every (k1, k2, k3) with k1 + k2 + k3 <= max_total and all index multisets.
std::vector<GsetCheck> verify_gset_rank(int n, const std::vector<int>& J1, const std::vector<int>& J3, int max_total);
// ker phi = (R_3) on the extended ring in degrees 0..kmax.
std::vector<KernelComparison> verify_phi_kernel(int n, const std::vector<int>& J1, const std::vector<int>& J3, int kmax);

// All multisets of the given size drawn from values, each sorted.
std::vector<std::vector<int>> multisets(const std::vector<int>& values, int size);

}  // namespace detvar
