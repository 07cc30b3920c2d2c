#include <stdexcept>

#include "filtration/filtration.hpp"

namespace filtration {

using oscrep::xv;
using oscrep::yv;

Regime regime(const Config& cfg) {
    cfg.validate();
    if (cfg.n1 < cfg.n2) {
        if (cfg.l1 <= 0 || cfg.l2 <= 0) return Regime::SignedTN;
        return cfg.n2 == cfg.n ? Regime::PositiveFull : Regime::Unsupported;
    }
    if (cfg.n2 == cfg.n || cfg.n1 == 0) return Regime::Unsupported;
    if (cfg.l1 <= 0 && cfg.l2 <= 0) return Regime::EqualMonomial;
    if (cfg.l1 + cfg.l2 > 0) return Regime::Unsupported;
    if (cfg.l2 > 0) return cfg.n1 >= 2 ? Regime::EqualAltJ1 : Regime::Unsupported;
    return cfg.n - cfg.n2 >= 2 ? Regime::EqualAltJ3 : Regime::Unsupported;
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::SignedTN: return "signed-TN";
        case Regime::PositiveFull: return "positive-n2-eq-n";
        case Regime::EqualMonomial: return "n1-eq-n2-monomial";
        case Regime::EqualAltJ1: return "n1-eq-n2-alternating-J1";
        case Regime::EqualAltJ3: return "n1-eq-n2-alternating-J3";
        case Regime::Unsupported: break;
    }
    return "unsupported";
}

std::string method_name(Method m) {
    switch (m) {
        case Method::BruteForce: return "BruteForce";
        case Method::ExplicitV: return "ExplicitV";
        case Method::ExplicitVPrime: return "ExplicitVPrime";
        case Method::N1EqualsN2Span: return "N1EqualsN2Span";
    }
    return "";
}

Method explicit_method(const Config& cfg) {
    switch (regime(cfg)) {
        case Regime::SignedTN: return Method::ExplicitV;
        case Regime::PositiveFull: return Method::ExplicitVPrime;
        case Regime::Unsupported: throw std::invalid_argument("unsupported regime " + cfg.str());
        default: return Method::N1EqualsN2Span;
    }
}

std::vector<Poly> pset(const Config& cfg) {
    std::vector<Poly> out;
    for (int i : cfg.J1())
        for (int j : cfg.J3()) out.push_back(xv(cfg, i) * xv(cfg, j) - yv(cfg, i) * yv(cfg, j));
    return out;
}

namespace {

// Every monomial of the given degree in the listed variables.
std::vector<Poly> power_products(const Config& cfg, const std::vector<Poly>& vars, int deg) {
    std::vector<Poly> out;
    for (const auto& e : oscrep::compositions(deg, static_cast<int>(vars.size()))) {
        Poly p = Poly::constant(cfg.space(), 1);
        for (std::size_t i = 0; i < vars.size(); ++i) p = p * vars[i].pow(e[i]);
        out.push_back(p);
    }
    return out;
}

std::vector<Poly> alternating_products(const Config& cfg, const std::vector<int>& idx, int total) {
    std::vector<Poly> pairs;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            pairs.push_back(xv(cfg, idx[a]) * yv(cfg, idx[b]) - xv(cfg, idx[b]) * yv(cfg, idx[a]));
    if (pairs.empty()) {
        if (total == 0) return {Poly::constant(cfg.space(), 1)};
        return {};
    }
    return power_products(cfg, pairs, total);
}

std::vector<Poly> xs(const Config& cfg, const std::vector<int>& idx) {
    std::vector<Poly> out;
    for (int i : idx) out.push_back(xv(cfg, i));
    return out;
}

std::vector<Poly> ys(const Config& cfg, const std::vector<int>& idx) {
    std::vector<Poly> out;
    for (int i : idx) out.push_back(yv(cfg, i));
    return out;
}

std::vector<Poly> products(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    std::vector<Poly> out;
    for (const auto& p : a)
        for (const auto& q : b) out.push_back(p * q);
    return out;
}

}  // namespace

std::vector<Poly> m0_generators(const Config& cfg) {
    std::vector<Poly> out;
    switch (regime(cfg)) {
        case Regime::SignedTN: {
            std::array<int, 6> ks{};
            if (cfg.l1 <= 0 && cfg.l2 <= 0)
                ks = {-cfg.l1, 0, 0, 0, 0, -cfg.l2};
            else if (cfg.l1 <= 0)
                ks = {-cfg.l1, 0, 0, 0, cfg.l2, 0};
            else
                ks = {0, cfg.l1, 0, 0, 0, -cfg.l2};
            for (const auto& m : oscrep::enumerate_N(cfg, ks)) out.push_back(oscrep::project_T(cfg, m));
            return out;
        }
        case Regime::PositiveFull:
            for (int k21 = 0; k21 <= cfg.l2; ++k21)
                for (const auto& m : oscrep::enumerate_N(cfg, {0, cfg.l1, 0, k21, cfg.l2 - k21, 0}))
                    out.push_back(oscrep::project_T(cfg, m));
            return out;
        case Regime::EqualMonomial:
            return products(power_products(cfg, xs(cfg, cfg.J1()), -cfg.l1),
                            power_products(cfg, ys(cfg, cfg.J3()), -cfg.l2));
        case Regime::EqualAltJ1:
            return products(alternating_products(cfg, cfg.J1(), cfg.l2),
                            power_products(cfg, xs(cfg, cfg.J1()), -cfg.l1 - cfg.l2));
        case Regime::EqualAltJ3:
            return products(alternating_products(cfg, cfg.J3(), cfg.l1),
                            power_products(cfg, ys(cfg, cfg.J3()), -cfg.l1 - cfg.l2));
        case Regime::Unsupported: break;
    }
    throw std::invalid_argument("unsupported regime " + cfg.str());
}

GradedSpan build_M0(const Config& cfg) {
    GradedSpan s(cfg);
    for (const auto& p : m0_generators(cfg)) s.insert(p);
    s.close_level();
    return s;
}

void bruteforce_extend(Tower& t) {
    if (t.dims.empty()) throw std::logic_error("tower has no base level");
    auto fresh = t.span.level_rows(t.depth());
    for (const auto& g : oscrep::all_generators(t.cfg.n)) {
        if (g.kind == oscrep::Generator::Cartan) continue;  // weight vectors are eigenvectors
        for (const auto& v : fresh) t.span.insert(oscrep::apply_generator(t.cfg, g, v));
    }
    t.span.close_level();
    t.dims.push_back(t.span.dim());
}

Tower bruteforce_tower(const Config& cfg, int kmax, const Progress& progress) {
    Tower t(cfg, Method::BruteForce);
    t.span = build_M0(cfg);
    t.dims.push_back(t.span.dim());
    if (progress) progress(0, t.dims.back());
    for (int k = 1; k <= kmax; ++k) {
        bruteforce_extend(t);
        if (progress) progress(k, t.dims.back());
    }
    return t;
}

std::vector<long long> hilbert_sequence(const std::vector<std::size_t>& dims) {
    std::vector<long long> out;
    for (std::size_t k = 0; k < dims.size(); ++k)
        out.push_back(static_cast<long long>(dims[k]) - (k ? static_cast<long long>(dims[k - 1]) : 0));
    return out;
}

std::vector<long long> hilbert_sequence(const Tower& t) { return hilbert_sequence(t.dims); }

}  // namespace filtration
