#include <algorithm>
#include <stdexcept>

#include "annihilator/annihilator.hpp"

namespace annihilator {

using exactpoly::VarSpace;

Space sym_space(int n) { return VarSpace::sym(n); }

SymElement symbol(int n, const Generator& g) { return Poly::var(sym_space(n), oscrep::generator_index(n, g)); }

std::optional<SymElement> root_symbol(int n, int j, int i) {
    if (i == j) return std::nullopt;
    return symbol(n, Generator::root(j, i));
}

namespace {

std::vector<int> factor_indices(const Mono& m, int nvars) {
    std::vector<int> out;
    for (int v = nvars - 1; v >= 0; --v)
        for (int e = 0; e < m[static_cast<std::size_t>(v)]; ++e) out.push_back(v);
    return out;
}

std::vector<Generator> to_generators(int n, const std::vector<int>& idx) {
    std::vector<Generator> out;
    out.reserve(idx.size());
    for (int v : idx) out.push_back(oscrep::generator_at(n, v));
    return out;
}

}  // namespace

OpSum words_of(int n, const SymElement& e) {
    OpSum out;
    for (const auto& [m, c] : e.terms())
        out.push_back({c, to_generators(n, factor_indices(m, e.space()->nvars()))});
    return out;
}

OpSum words_of_permuted(int n, const SymElement& e, unsigned rank) {
    OpSum out;
    for (const auto& [m, c] : e.terms()) {
        auto idx = factor_indices(m, e.space()->nvars());
        std::sort(idx.begin(), idx.end());
        for (unsigned r = 0; r < rank; ++r)
            if (!std::next_permutation(idx.begin(), idx.end())) std::sort(idx.begin(), idx.end());
        out.push_back({c, to_generators(n, idx)});
    }
    return out;
}

Poly apply_word(const Config& cfg, const std::vector<Generator>& factors, const Poly& v) {
    Poly cur = v;
    for (auto it = factors.rbegin(); it != factors.rend() && !cur.is_zero(); ++it) {
        if (it->kind == Generator::Cartan)
            cur = oscrep::apply_generator(cfg, *it, cur);
        else
            cur = oscrep::apply_gl(cfg, it->i, it->j, cur);
    }
    return cur;
}

Poly apply(const Config& cfg, const OpSum& op, const Poly& v) {
    exactpoly::PolyBuilder b(v.space());
    for (const auto& w : op) b.add(apply_word(cfg, w.factors, v), w.coef);
    return b.finish();
}

Poly apply(const Config& cfg, const SymElement& e, const Poly& v) { return apply(cfg, words_of(cfg.n, e), v); }

bool in_L(const Config& cfg, int j, int i) { return cfg.block(j) > cfg.block(i); }

std::vector<std::pair<int, int>> L_pairs(const Config& cfg) {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= cfg.n; ++j)
        for (int i = 1; i <= cfg.n; ++i)
            if (in_L(cfg, j, i)) out.emplace_back(j, i);
    return out;
}

std::vector<SymElement> L_symbols(const Config& cfg) {
    std::vector<SymElement> out;
    for (const auto& [j, i] : L_pairs(cfg)) out.push_back(*root_symbol(cfg.n, j, i));
    return out;
}

SymElement project_L(const Config& cfg, const SymElement& e) {
    std::vector<bool> keep(static_cast<std::size_t>(e.space()->nvars()), false);
    for (const auto& [j, i] : L_pairs(cfg))
        keep[static_cast<std::size_t>(oscrep::generator_index(cfg.n, Generator::root(j, i)))] = true;
    std::vector<exactpoly::Term> out;
    for (const auto& t : e.terms()) {
        bool ok = true;
        for (int v = 0; v < e.space()->nvars() && ok; ++v) ok = t.first[static_cast<std::size_t>(v)] == 0 || keep[static_cast<std::size_t>(v)];
        if (ok) out.push_back(t);
    }
    return Poly(e.space(), std::move(out));
}

std::vector<Poly> act(const Tower& t, const SymElement& e, int k) {
    const int p = e.degree();
    if (k + p - 1 > t.depth()) throw std::out_of_range("tower too shallow for this action");
    auto op = words_of(t.cfg.n, e);
    std::vector<Poly> out;
    for (const auto& v : t.span.level_rows(k)) out.push_back(t.span.reduce(apply(t.cfg, op, v), k + p - 1));
    return out;
}

bool maps_into(const Tower& t, const OpSum& op, int kmax, int shift) {
    if (kmax + shift > t.depth()) throw std::out_of_range("tower too shallow for this check");
    for (int k = 0; k <= kmax; ++k)
        for (const auto& v : t.span.level_rows(k))
            if (!t.span.contains(apply(t.cfg, op, v), k + shift)) return false;
    return true;
}

std::vector<SymElement> monomials_in(const std::vector<SymElement>& symbols, int p) {
    std::vector<SymElement> out;
    if (symbols.empty()) return out;
    auto rec = [&](auto&& self, std::size_t from, int left, const SymElement& cur) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t s = from; s < symbols.size(); ++s) self(self, s, left - 1, cur * symbols[s]);
    };
    rec(rec, 0, p, Poly::constant(symbols.front().space(), 1));
    return out;
}

exactpoly::EchelonBasis span_of(const Space& s, const std::vector<SymElement>& v) {
    exactpoly::EchelonBasis out(s);
    for (const auto& e : v) out.insert(e);
    return out;
}

exactpoly::EchelonBasis ideal_degree(const std::vector<SymElement>& gens, const std::vector<SymElement>& symbols,
                                     int d) {
    if (symbols.empty()) throw std::invalid_argument("no symbols");
    exactpoly::EchelonBasis out(symbols.front().space());
    for (const auto& g : gens) {
        if (g.is_zero() || g.degree() > d) continue;
        for (const auto& m : monomials_in(symbols, d - g.degree())) out.insert(g * m);
    }
    return out;
}

}  // namespace annihilator
