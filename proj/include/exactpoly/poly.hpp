#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "exactpoly/monomial.hpp"
#include "exactpoly/space.hpp"

namespace exactpoly {

using Q = mpq_class;
using Z = mpz_class;
using Term = std::pair<Mono, Q>;

// Sparse polynomial with rational coefficients, terms sorted by decreasing monomial.
class Poly {
public:
    explicit Poly(Space s) : space_(std::move(s)) {}
    Poly(Space s, std::vector<Term> sorted_terms);

    static Poly constant(Space s, const Q& c);
    static Poly var(Space s, int v);
    static Poly monomial(Space s, const Mono& m, const Q& c = 1);

    const Space& space() const { return space_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const Mono& lead() const { return terms_.front().first; }
    Q coeff(const Mono& m) const;
    int degree() const;  // -1 for zero

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Q& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly mul_mono(const Mono& m, const Q& c = 1) const;
    Poly pow(int e) const;
    Poly diff(int v) const;
    // Simultaneous substitution; unassigned variables keep their index in the target space.
    Poly substitute(const std::map<int, Poly>& assignment, const Space& target) const;

    std::string str() const;

private:
    Space space_;
    std::vector<Term> terms_;
};

// Hash accumulator that produces a sorted Poly.
class PolyBuilder {
public:
    explicit PolyBuilder(Space s) : space_(std::move(s)) {}
    void add(const Mono& m, const Q& c);
    void add(const Poly& p, const Q& c = 1);
    Poly finish();
    bool empty() const { return acc_.empty(); }

private:
    Space space_;
    std::unordered_map<Mono, Q, MonoHash> acc_;
};

std::string mono_str(const VarSpace& s, const Mono& m);

// All monomials of exact total degree d in the first nvars variables, decreasing order.
std::vector<Mono> monomials_of_degree(int nvars, int d);

}  // namespace exactpoly
