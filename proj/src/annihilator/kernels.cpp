#include <stdexcept>

#include "annihilator/annihilator.hpp"

namespace annihilator {

namespace {

using Coeffs = std::vector<Q>;

// Shrinks the kernel basis to the combinations whose residues vanish on v.
void restrict_kernel(std::vector<Coeffs>& basis, const std::vector<Poly>& residue_of_unknown) {
    std::vector<exactpoly::IVec<Mono>> images;
    std::vector<Q> scales;
    images.reserve(basis.size());
    for (const auto& b : basis) {
        exactpoly::PolyBuilder acc(residue_of_unknown.front().space());
        for (std::size_t u = 0; u < b.size(); ++u)
            if (b[u] != 0) acc.add(residue_of_unknown[u], b[u]);
        Q s;
        images.push_back(exactpoly::to_ivec(acc.finish(), &s));
        scales.push_back(s);
    }
    auto ker = exactpoly::kernel_vectors<Mono, exactpoly::MonoHash>(images);
    std::vector<Coeffs> next;
    for (const auto& combo : ker) {
        Coeffs c(basis.front().size(), Q(0));
        for (const auto& [idx, z] : combo) {
            Q f = Q(z) * scales[idx];
            for (std::size_t u = 0; u < c.size(); ++u)
                if (basis[idx][u] != 0) c[u] += f * basis[idx][u];
        }
        // clear denominators and content to keep entries small
        Z l = 1, g = 0;
        for (const auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        for (auto& q : c) {
            q *= l;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
        }
        if (g > 1)
            for (auto& q : c) q /= g;
        next.push_back(std::move(c));
    }
    basis = std::move(next);
}

}  // namespace

AnnihilatorPiece compute_Ip(const Tower& t, int p, int kmax, const std::vector<SymElement>& symbols) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (kmax < p) throw std::invalid_argument("kmax must be at least p");
    if (kmax - 1 > t.depth()) throw std::out_of_range("tower too shallow for kmax");
    const Config& cfg = t.cfg;
    auto domain = monomials_in(symbols, p);
    std::vector<OpSum> ops;
    ops.reserve(domain.size());
    for (const auto& d : domain) ops.push_back(words_of(cfg.n, d));

    AnnihilatorPiece out;
    out.p = p;
    out.unknowns = domain.size();
    out.kmax_checked = kmax - p;
    std::vector<Coeffs> basis;
    for (std::size_t u = 0; u < domain.size(); ++u) {
        Coeffs c(domain.size(), Q(0));
        c[u] = 1;
        basis.push_back(std::move(c));
    }
    for (int k = 0; k <= kmax - p && !basis.empty(); ++k) {
        if (k == kmax - p) out.previous_dim = basis.size();
        for (const auto& v : t.span.level_rows(k)) {
            if (basis.empty()) break;
            std::vector<bool> live(domain.size(), false);
            for (const auto& b : basis)
                for (std::size_t u = 0; u < b.size(); ++u) live[u] = live[u] || b[u] != 0;
            std::vector<Poly> res(domain.size(), Poly(v.space()));
            for (std::size_t u = 0; u < domain.size(); ++u)
                if (live[u]) res[u] = t.span.reduce(apply(cfg, ops[u], v), k + p - 1);
            restrict_kernel(basis, res);
        }
    }
    out.stabilized = basis.size() == out.previous_dim;

    exactpoly::EchelonBasis ech(sym_space(cfg.n));
    for (const auto& b : basis) {
        exactpoly::PolyBuilder acc(sym_space(cfg.n));
        for (std::size_t u = 0; u < b.size(); ++u)
            if (b[u] != 0) acc.add(domain[u], b[u]);
        ech.insert(acc.finish());
    }
    out.basis = ech.canonical_rows();
    return out;
}

AnnihilatorPiece compute_I1(const Tower& t, int kmax) {
    std::vector<SymElement> all;
    for (const auto& g : oscrep::all_generators(t.cfg.n)) all.push_back(symbol(t.cfg.n, g));
    return compute_Ip(t, 1, kmax, all);
}

AnnihilatorPiece compute_Ip_L(const Tower& t, int p, int kmax) { return compute_Ip(t, p, kmax, L_symbols(t.cfg)); }

}  // namespace annihilator
