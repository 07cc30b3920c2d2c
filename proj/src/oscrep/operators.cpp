#include <stdexcept>

#include "oscrep/oscrep.hpp"

namespace oscrep {

using exactpoly::PolyBuilder;

namespace {

inline std::size_t X(const Config&, int i) { return static_cast<std::size_t>(i - 1); }
inline std::size_t Y(const Config& cfg, int i) { return static_cast<std::size_t>(cfg.n + i - 1); }

// out += coef * E^x_{i,j}(m)
void ex_term(const Config& cfg, int i, int j, const Mono& m, const Q& coef, PolyBuilder& out) {
    const int n1 = cfg.n1;
    if (i <= n1 && j <= n1) {
        int a = m[X(cfg, i)];
        if (a) {
            Mono r = m;
            r.bump(X(cfg, i), -1);
            r.bump(X(cfg, j), 1);
            out.add(r, -coef * a);
        }
        if (i == j) out.add(m, -coef);
    } else if (i <= n1) {
        int a = m[X(cfg, i)], b = m[X(cfg, j)];
        if (a && b) {
            Mono r = m;
            r.bump(X(cfg, i), -1);
            r.bump(X(cfg, j), -1);
            out.add(r, coef * (a * b));
        }
    } else if (j <= n1) {
        Mono r = m;
        r.bump(X(cfg, i), 1);
        r.bump(X(cfg, j), 1);
        out.add(r, -coef);
    } else {
        int a = m[X(cfg, j)];
        if (a) {
            Mono r = m;
            r.bump(X(cfg, j), -1);
            r.bump(X(cfg, i), 1);
            out.add(r, coef * a);
        }
    }
}

// out += coef * E^y_{i,j}(m)
void ey_term(const Config& cfg, int i, int j, const Mono& m, const Q& coef, PolyBuilder& out) {
    const int n2 = cfg.n2;
    if (i <= n2 && j <= n2) {
        int a = m[Y(cfg, j)];
        if (a) {
            Mono r = m;
            r.bump(Y(cfg, j), -1);
            r.bump(Y(cfg, i), 1);
            out.add(r, coef * a);
        }
    } else if (i <= n2) {
        Mono r = m;
        r.bump(Y(cfg, i), 1);
        r.bump(Y(cfg, j), 1);
        out.add(r, -coef);
    } else if (j <= n2) {
        int a = m[Y(cfg, i)], b = m[Y(cfg, j)];
        if (a && b) {
            Mono r = m;
            r.bump(Y(cfg, i), -1);
            r.bump(Y(cfg, j), -1);
            out.add(r, coef * (a * b));
        }
    } else {
        int a = m[Y(cfg, i)];
        if (a) {
            Mono r = m;
            r.bump(Y(cfg, i), -1);
            r.bump(Y(cfg, j), 1);
            out.add(r, -coef * a);
        }
        if (i == j) out.add(m, -coef);
    }
}

void check_index(const Config& cfg, int i) {
    if (i < 1 || i > cfg.n) throw std::out_of_range("generator index out of range");
}

}  // namespace

Poly apply_gl(const Config& cfg, int i, int j, const Poly& f) {
    check_index(cfg, i);
    check_index(cfg, j);
    PolyBuilder out(f.space());
    for (const auto& [m, c] : f.terms()) {
        ex_term(cfg, i, j, m, c, out);
        ey_term(cfg, j, i, m, -c, out);
    }
    return out.finish();
}

Poly apply_generator(const Config& cfg, const Generator& g, const Poly& f) {
    if (g.kind == Generator::Root) {
        if (g.i == g.j) throw std::out_of_range("root needs i != j");
        return apply_gl(cfg, g.i, g.j, f);
    }
    if (g.i < 1 || g.i >= cfg.n) throw std::out_of_range("Cartan index out of range");
    return apply_gl(cfg, g.i, g.i, f) - apply_gl(cfg, g.i + 1, g.i + 1, f);
}

std::vector<int> gl_weight(const Config& cfg, const Mono& m) {
    std::vector<int> w(static_cast<std::size_t>(cfg.n));
    for (int r = 1; r <= cfg.n; ++r) {
        int a = m[X(cfg, r)], b = m[Y(cfg, r)];
        int e;
        switch (cfg.block(r)) {
            case 1: e = -a - b - 1; break;
            case 2: e = a - b; break;
            default: e = a + b + 1; break;
        }
        w[static_cast<std::size_t>(r - 1)] = e;
    }
    return w;
}

namespace {

// Laplacian without the (n1+1) summand when skip_c is set.
Poly laplace_impl(const Config& cfg, const Poly& f, bool skip_c) {
    PolyBuilder out(f.space());
    for (const auto& [m, c] : f.terms()) {
        for (int i = 1; i <= cfg.n; ++i) {
            int a = m[X(cfg, i)], b = m[Y(cfg, i)];
            switch (cfg.block(i)) {
                case 1:
                    if (b) {
                        Mono r = m;
                        r.bump(Y(cfg, i), -1);
                        r.bump(X(cfg, i), 1);
                        out.add(r, c * b);
                    }
                    break;
                case 2:
                    if (skip_c && i == cfg.c()) break;
                    if (a && b) {
                        Mono r = m;
                        r.bump(X(cfg, i), -1);
                        r.bump(Y(cfg, i), -1);
                        out.add(r, -c * (a * b));
                    }
                    break;
                default:
                    if (a) {
                        Mono r = m;
                        r.bump(X(cfg, i), -1);
                        r.bump(Y(cfg, i), 1);
                        out.add(r, c * a);
                    }
            }
        }
    }
    return out.finish();
}

}  // namespace

Poly laplace(const Config& cfg, const Poly& f) { return laplace_impl(cfg, f, false); }

Poly project_T(const Config& cfg, const Mono& m) {
    if (cfg.n1 >= cfg.n2) throw std::invalid_argument("T needs n1 < n2");
    const Space s = cfg.space();
    const int c = cfg.c();
    const int ac = m[X(cfg, c)], bc = m[Y(cfg, c)];
    Mono xy;
    xy.set(X(cfg, c), 1);
    xy.set(Y(cfg, c), 1);
    Poly result = Poly::monomial(s, m);
    Poly d = result;
    Mono shift;
    Q denom = 1;
    for (int i = 1;; ++i) {
        d = laplace_impl(cfg, d, true);
        if (d.is_zero()) break;
        denom *= Q((ac + i) * (bc + i));
        shift = shift * xy;
        result += d.mul_mono(shift, 1 / denom);
    }
    return result;
}

Poly apply_T(const Config& cfg, const Poly& f) {
    PolyBuilder out(f.space());
    for (const auto& [m, c] : f.terms()) out.add(project_T(cfg, m), c);
    return out.finish();
}

std::optional<std::vector<Q>> weight(const Config& cfg, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("weight of zero polynomial");
    std::vector<Q> out;
    for (int r = 1; r < cfg.n; ++r) {
        Poly g = apply_generator(cfg, Generator::cartan(r), f);
        Q lam = g.coeff(f.lead()) / f.terms().front().second;
        if (g != f * lam) return std::nullopt;
        out.push_back(lam);
    }
    return out;
}

Poly xv(const Config& cfg, int i) { return Poly::var(cfg.space(), cfg.space()->x(i)); }
Poly yv(const Config& cfg, int i) { return Poly::var(cfg.space(), cfg.space()->y(i)); }

}  // namespace oscrep
