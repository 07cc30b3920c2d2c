#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "detvar/detvar.hpp"

namespace detvar {

using exactpoly::VarSpace;

namespace {

void check_indices(int n, const std::vector<int>& J1, const std::vector<int>& J3) {
    for (int i : J1)
        if (i < 1 || i > n) throw std::invalid_argument("column index out of range");
    for (int j : J3)
        if (j < 1 || j > n) throw std::invalid_argument("row index out of range");
    for (int i : J1)
        if (std::find(J3.begin(), J3.end(), i) != J3.end()) throw std::invalid_argument("J1 and J3 overlap");
}

}  // namespace

ZRing ZRing::pure(int n, std::vector<int> J1, std::vector<int> J3) {
    check_indices(n, J1, J3);
    std::sort(J1.begin(), J1.end());
    std::sort(J3.begin(), J3.end());
    ZRing r;
    r.n = n;
    r.J1 = J1;
    r.J3 = J3;
    r.space = VarSpace::z(J3, J1);
    r.target = VarSpace::xy(n);
    return r;
}

ZRing ZRing::extended_ring(int n, std::vector<int> J1, std::vector<int> J3) {
    ZRing r = pure(n, std::move(J1), std::move(J3));
    r.extended = true;
    r.space = VarSpace::z(r.rows(), r.cols(), {{n + 1, 0}});
    return r;
}

std::vector<int> ZRing::rows() const {
    auto out = J3;
    if (extended) out.push_back(n + 1);
    return out;
}

std::vector<int> ZRing::cols() const {
    std::vector<int> out;
    if (extended) out.push_back(0);
    out.insert(out.end(), J1.begin(), J1.end());
    return out;
}

Poly ZRing::z(int j, int i) const {
    if (extended && j == n + 1 && i == 0) return Poly(space);
    int v = space->zvar(j, i);
    if (v < 0) throw std::out_of_range("no variable z" + std::to_string(j) + "_" + std::to_string(i));
    return Poly::var(space, v);
}

std::vector<exactpoly::Mono> ZRing::monomials(int degree) const {
    return exactpoly::monomials_of_degree(space->nvars(), degree);
}

namespace {

Poly xyvar(const ZRing& r, bool x, int i) { return Poly::var(r.target, x ? r.target->x(i) : r.target->y(i)); }

}  // namespace

Poly phi_x(const ZRing& r, const Poly& p) {
    if (r.extended) throw std::invalid_argument("phi_x is defined on the pure ring only");
    std::map<int, Poly> a;
    for (int v = 0; v < r.space->nvars(); ++v) {
        auto [j, i] = r.space->zpair(v);
        a.emplace(v, xyvar(r, true, i) * xyvar(r, true, j));
    }
    return p.substitute(a, r.target);
}

Poly phi_y(const ZRing& r, const Poly& p) {
    if (r.extended) throw std::invalid_argument("phi_y is defined on the pure ring only");
    std::map<int, Poly> a;
    for (int v = 0; v < r.space->nvars(); ++v) {
        auto [j, i] = r.space->zpair(v);
        a.emplace(v, xyvar(r, false, i) * xyvar(r, false, j));
    }
    return p.substitute(a, r.target);
}

Poly phi(const ZRing& r, const Poly& p) {
    std::map<int, Poly> a;
    for (int v = 0; v < r.space->nvars(); ++v) {
        auto [j, i] = r.space->zpair(v);
        if (j == r.n + 1)
            a.emplace(v, xyvar(r, true, i));
        else if (i == 0)
            a.emplace(v, xyvar(r, false, j));
        else
            a.emplace(v, xyvar(r, true, i) * xyvar(r, true, j) - xyvar(r, false, i) * xyvar(r, false, j));
    }
    return p.substitute(a, r.target);
}

namespace {

std::vector<std::vector<int>> subsets(const std::vector<int>& s, int t) {
    std::vector<std::vector<int>> out;
    if (t > static_cast<int>(s.size()) || t < 0) return out;
    std::vector<int> pick(s.size(), 0);
    std::fill(pick.begin(), pick.begin() + t, 1);
    do {
        std::vector<int> cur;
        for (std::size_t k = 0; k < s.size(); ++k)
            if (pick[k]) cur.push_back(s[k]);
        out.push_back(cur);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

int perm_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b) inv += p[a] > p[b];
    return inv % 2 ? -1 : 1;
}

}  // namespace

std::vector<Poly> minor_generators(const ZRing& r, int t, const std::vector<int>& rows, const std::vector<int>& cols) {
    std::vector<int> sr = rows, sc = cols;
    std::sort(sr.begin(), sr.end());
    std::sort(sc.begin(), sc.end());
    std::vector<Poly> out;
    if (t <= 0) return out;
    for (const auto& rs : subsets(sr, t))
        for (const auto& cs : subsets(sc, t)) {
            std::vector<int> p(static_cast<std::size_t>(t));
            std::iota(p.begin(), p.end(), 0);
            Poly det(r.space);
            do {
                Poly term = Poly::constant(r.space, perm_sign(p));
                for (int a = 0; a < t; ++a)
                    term = term * r.z(rs[static_cast<std::size_t>(a)], cs[static_cast<std::size_t>(p[static_cast<std::size_t>(a)])]);
                det += term;
            } while (std::next_permutation(p.begin(), p.end()));
            out.push_back(det);
        }
    return out;
}

exactpoly::EchelonBasis ideal_piece(const ZRing& r, const std::vector<Poly>& gens, int gen_degree, int d) {
    exactpoly::EchelonBasis out(r.space);
    if (d < gen_degree) return out;
    auto monos = r.monomials(d - gen_degree);
    for (const auto& g : gens)
        for (const auto& m : monos) out.insert(g.mul_mono(m));
    return out;
}

}  // namespace detvar
