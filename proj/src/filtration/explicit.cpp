#include <stdexcept>

#include "filtration/filtration.hpp"

namespace filtration {

namespace {

// Products of all size-i multisets drawn from the P-set.
std::vector<Poly> p_products(const Config& cfg, int i) {
    auto ps = pset(cfg);
    std::vector<Poly> out;
    if (ps.empty()) {
        if (i == 0) out.push_back(Poly::constant(cfg.space(), 1));
        return out;
    }
    for (const auto& e : oscrep::compositions(i, static_cast<int>(ps.size()))) {
        Poly p = Poly::constant(cfg.space(), 1);
        for (std::size_t j = 0; j < ps.size(); ++j)
            if (e[j]) p = p * ps[j].pow(e[j]);
        out.push_back(p);
    }
    return out;
}

std::vector<Poly> tn_level(const Config& cfg, int k) {
    std::vector<Poly> out;
    for (const auto& m : oscrep::enumerate_TN_level(cfg, k)) out.push_back(oscrep::project_T(cfg, m));
    return out;
}

void require_signed(const Config& cfg) {
    if (regime(cfg) != Regime::SignedTN) throw std::invalid_argument("P-order needs n1 < n2 with l1 <= 0 or l2 <= 0");
}

}  // namespace

GradedSpan partial_Vk(const Config& cfg, int k, int s) {
    require_signed(cfg);
    GradedSpan out(cfg);
    for (int j = 0; j <= k; ++j)
        for (const auto& p : tn_level(cfg, j)) out.insert(p);
    for (int r = 1; r <= std::min(s, k); ++r) {
        auto prods = p_products(cfg, r);
        for (const auto& f : tn_level(cfg, k - r))
            for (const auto& q : prods) out.insert(f * q);
    }
    out.close_level();
    return out;
}

std::vector<Poly> explicit_generators(const Config& cfg, int k) {
    std::vector<Poly> out;
    switch (regime(cfg)) {
        case Regime::SignedTN:
            for (int j = 0; j <= k; ++j)
                for (auto& p : tn_level(cfg, j)) out.push_back(std::move(p));
            for (int i = 1; i <= k; ++i) {
                auto prods = p_products(cfg, i);
                for (const auto& f : tn_level(cfg, k - i))
                    for (const auto& q : prods) out.push_back(f * q);
            }
            return out;
        case Regime::PositiveFull:
            for (int t = 0; t <= k; ++t)
                for (int k21 = 0; k21 <= cfg.l2; ++k21)
                    for (const auto& m : oscrep::enumerate_N(cfg, {t, cfg.l1 + t, 0, k21, cfg.l2 - k21, 0}))
                        out.push_back(oscrep::project_T(cfg, m));
            return out;
        case Regime::Unsupported: throw std::invalid_argument("unsupported regime " + cfg.str());
        default: {
            auto m0 = m0_generators(cfg);
            for (int i = 0; i <= k; ++i)
                for (const auto& q : p_products(cfg, i))
                    for (const auto& f : m0) out.push_back(f * q);
            return out;
        }
    }
}

GradedSpan explicit_Vk(const Config& cfg, int k) {
    GradedSpan out(cfg);
    for (const auto& p : explicit_generators(cfg, k)) out.insert(p);
    out.close_level();
    return out;
}

Tower explicit_tower(const Config& cfg, int kmax, const Progress& progress) {
    Tower t(cfg, explicit_method(cfg));
    for (int k = 0; k <= kmax; ++k) {
        for (const auto& p : explicit_generators(cfg, k)) t.span.insert(p);
        t.span.close_level();
        t.dims.push_back(t.span.dim());
        if (progress) progress(k, t.dims.back());
    }
    return t;
}

std::vector<LevelComparison> verify_tower_agreement(const Config& cfg, int kmax, const Tower* brute) {
    Tower own(cfg);
    if (!brute || brute->depth() < kmax) {
        own = bruteforce_tower(cfg, kmax);
        brute = &own;
    }
    std::vector<LevelComparison> out;
    for (int k = 0; k <= kmax; ++k) {
        GradedSpan v = explicit_Vk(cfg, k);
        LevelComparison c;
        c.k = k;
        c.dim_bruteforce = brute->span.dim(k);
        c.dim_explicit = v.dim();
        c.explicit_in_bruteforce = v.subspace_of(brute->span, -1, k);
        c.bruteforce_in_explicit = brute->span.subspace_of(v, k, -1);
        out.push_back(c);
    }
    return out;
}

int p_order(const Config& cfg, int k, const Poly& f) {
    require_signed(cfg);
    if (!partial_Vk(cfg, k, k).contains(f)) throw std::invalid_argument("element is not in M_k");
    for (int s = 0; s < k; ++s)
        if (partial_Vk(cfg, k, s).contains(f)) return s;
    return k;
}

}  // namespace filtration
