#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "exactpoly/echelon.hpp"
#include "exactpoly/poly.hpp"

namespace oscrep {

using exactpoly::Mono;
using exactpoly::Poly;
using exactpoly::Q;
using exactpoly::Space;

struct Config {
    int n = 3, n1 = 1, n2 = 2, l1 = 0, l2 = 0;

    void validate() const;  // throws std::invalid_argument
    int c() const { return n1 + 1; }
    int block(int i) const { return i <= n1 ? 1 : (i <= n2 ? 2 : 3); }
    std::vector<int> J1() const;
    std::vector<int> J2() const;
    std::vector<int> J3() const;
    Space space() const;
    std::string str() const;
};

// E_{i,j} for i != j, or the Cartan element E_{r,r}-E_{r+1,r+1} (kind Cartan, i = j = r).
struct Generator {
    enum Kind { Root, Cartan } kind = Root;
    int i = 1, j = 2;

    static Generator root(int i, int j) { return {Root, i, j}; }
    static Generator cartan(int r) { return {Cartan, r, r}; }
    bool operator==(const Generator& o) const { return kind == o.kind && i == o.i && j == o.j; }
    std::string str() const;
};

// Enumeration order matches the symbol order of exactpoly::VarSpace::sym(n).
std::vector<Generator> all_generators(int n);
int generator_index(int n, const Generator& g);
Generator generator_at(int n, int index);

// gl(n) action: pi~(E_{i,j}) including i == j.
Poly apply_gl(const Config& cfg, int i, int j, const Poly& f);
Poly apply_generator(const Config& cfg, const Generator& g, const Poly& f);
Poly laplace(const Config& cfg, const Poly& f);

// Projection onto harmonic polynomials, requires n1 < n2.
Poly project_T(const Config& cfg, const Mono& m);
Poly apply_T(const Config& cfg, const Poly& f);

struct GradedKey {
    int l1 = 0, l2 = 0;
    bool operator==(const GradedKey& o) const { return l1 == o.l1 && l2 == o.l2; }
};
GradedKey grading(const Config& cfg, const Mono& m);

int dfun_mono(const Config& cfg, const Mono& m);
int dfun(const Config& cfg, const Poly& f);
int dprime(const Config& cfg, const Poly& f);

// Eigenvalues of pi~(E_{r,r}) on a monomial, r = 1..n.
std::vector<int> gl_weight(const Config& cfg, const Mono& m);

// Monomials of the grading with d = k and alpha_c * beta_c = 0.
std::vector<Mono> enumerate_TN_level(const Config& cfg, int k);
// Monomials with prescribed block sums (k11,k12,k13; k21,k22,k23), alpha_c * beta_c = 0.
std::vector<Mono> enumerate_N(const Config& cfg, const std::array<int, 6>& ks);

// Cartan eigenvalues, or nullopt when f is not a simultaneous eigenvector.
std::optional<std::vector<Q>> weight(const Config& cfg, const Poly& f);
bool classify_irreducible(const Config& cfg);

// Shorthands.
Poly xv(const Config& cfg, int i);
Poly yv(const Config& cfg, int i);

// All vectors of given length with nonnegative entries summing to total.
std::vector<std::vector<int>> compositions(int total, int parts);

}  // namespace oscrep
