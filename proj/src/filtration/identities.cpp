#include <stdexcept>

#include "filtration/filtration.hpp"

namespace filtration {

using oscrep::xv;
using oscrep::yv;

Poly apply_word(const Config& cfg, const std::vector<std::pair<int, int>>& ops, const Poly& f) {
    Poly out = f;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) out = oscrep::apply_gl(cfg, it->first, it->second, out);
    return out;
}

bool admissible_v0(const Config& cfg, const Poly& v0) {
    auto s = cfg.space();
    bool x_side = true, y_side = true;
    for (const auto& t : v0.terms())
        for (int i = 1; i <= cfg.n; ++i) {
            int a = t.first[static_cast<std::size_t>(s->x(i))], b = t.first[static_cast<std::size_t>(s->y(i))];
            int blk = cfg.block(i);
            if (blk == 1 && b) return false;
            if (blk == 3 && a) return false;
            if (i == cfg.c() && (a || b)) return false;
            if (blk == 2) {
                if (b) x_side = false;
                if (a) y_side = false;
            }
        }
    return x_side || y_side;
}

namespace {

Q factorial_ratio(int k, int r) {
    Q out = 1;
    for (int i = r + 1; i <= k; ++i) out *= i;
    return out;
}

Q sign(int e) { return e % 2 ? Q(-1) : Q(1); }

void check_blocks(const Config& cfg, const std::vector<int>& idx, int block) {
    for (int i : idx)
        if (i < 1 || i > cfg.n || cfg.block(i) != block) throw std::invalid_argument("index outside its block");
}

void check_common(const Config& cfg, const Poly& v) {
    if (cfg.n1 >= cfg.n2) throw std::invalid_argument("identities need n1 < n2");
    if (!admissible_v0(cfg, v)) throw std::invalid_argument("v0 outside the admissible subrings");
}

Poly prod(const Config& cfg, const std::vector<int>& idx, bool x) {
    Poly p = Poly::constant(cfg.space(), 1);
    for (int i : idx) p = p * (x ? xv(cfg, i) : yv(cfg, i));
    return p;
}

}  // namespace

IdentitySides identity_x(const Config& cfg, const std::vector<int>& i1s, const std::vector<int>& i3s, const Poly& v0) {
    check_common(cfg, v0);
    check_blocks(cfg, i1s, 1);
    check_blocks(cfg, i3s, 3);
    int k = static_cast<int>(i1s.size()), k13 = static_cast<int>(i3s.size()), c = cfg.c();
    if (k < k13) throw std::invalid_argument("need k >= k13");
    Poly arg = v0 * prod(cfg, i1s, true) * prod(cfg, i3s, true) * xv(cfg, c).pow(k - k13);
    std::vector<std::pair<int, int>> ops;
    for (int j = k13 - 1; j >= 0; --j) ops.emplace_back(i3s[static_cast<std::size_t>(j)], c);
    for (int i : i1s) ops.emplace_back(c, i);
    return {oscrep::apply_T(cfg, arg) * (sign(k) * factorial_ratio(k, k - k13)), apply_word(cfg, ops, v0)};
}

IdentitySides identity_y(const Config& cfg, const std::vector<int>& i1s, const std::vector<int>& i3s, const Poly& v0) {
    check_common(cfg, v0);
    check_blocks(cfg, i1s, 1);
    check_blocks(cfg, i3s, 3);
    int k21 = static_cast<int>(i1s.size()), k = static_cast<int>(i3s.size()), c = cfg.c();
    if (k < k21) throw std::invalid_argument("need k >= k21");
    Poly arg = v0 * prod(cfg, i1s, false) * prod(cfg, i3s, false) * yv(cfg, c).pow(k - k21);
    std::vector<std::pair<int, int>> ops;
    for (int i : i1s) ops.emplace_back(c, i);
    for (int j : i3s) ops.emplace_back(j, c);
    return {oscrep::apply_T(cfg, arg) * (sign(k21) * factorial_ratio(k, k - k21)), apply_word(cfg, ops, v0)};
}

IdentitySides collapsed_x(const Config& cfg, int k, const std::vector<int>& i3s, const Poly& v1) {
    check_common(cfg, v1);
    check_blocks(cfg, i3s, 3);
    int c = cfg.c(), alpha = k - static_cast<int>(i3s.size());
    if (alpha < 0) throw std::invalid_argument("need k >= number of factors");
    Poly arg = v1 * prod(cfg, i3s, true) * xv(cfg, c).pow(alpha);
    std::vector<std::pair<int, int>> ops;
    for (auto it = i3s.rbegin(); it != i3s.rend(); ++it) ops.emplace_back(*it, c);
    return {oscrep::apply_T(cfg, arg) * factorial_ratio(k, alpha), apply_word(cfg, ops, v1 * xv(cfg, c).pow(k))};
}

IdentitySides collapsed_y(const Config& cfg, int k, const std::vector<int>& i1s, const Poly& v1) {
    check_common(cfg, v1);
    check_blocks(cfg, i1s, 1);
    int c = cfg.c(), beta = k - static_cast<int>(i1s.size());
    if (beta < 0) throw std::invalid_argument("need k >= number of factors");
    Poly arg = v1 * prod(cfg, i1s, false) * yv(cfg, c).pow(beta);
    std::vector<std::pair<int, int>> ops;
    for (int i : i1s) ops.emplace_back(c, i);
    return {oscrep::apply_T(cfg, arg) * (sign(k - beta) * factorial_ratio(k, beta)),
            apply_word(cfg, ops, v1 * yv(cfg, c).pow(k))};
}

namespace {

// Words over an alphabet, all lengths exactly len.
std::vector<std::vector<int>> words(const std::vector<int>& alphabet, int len) {
    std::vector<std::vector<int>> out{{}};
    for (int l = 0; l < len; ++l) {
        std::vector<std::vector<int>> next;
        for (const auto& w : out)
            for (int a : alphabet) {
                next.push_back(w);
                next.back().push_back(a);
            }
        out = std::move(next);
    }
    return out;
}

std::vector<Poly> admissible_monomials(const Config& cfg, int deg) {
    std::vector<Poly> out;
    std::vector<int> mid;
    for (int i : cfg.J2())
        if (i != cfg.c()) mid.push_back(i);
    for (int side = 0; side < 2; ++side) {
        std::vector<Poly> vars;
        for (int i : cfg.J1()) vars.push_back(xv(cfg, i));
        for (int i : mid) vars.push_back(side == 0 ? xv(cfg, i) : yv(cfg, i));
        for (int i : cfg.J3()) vars.push_back(yv(cfg, i));
        for (int d = 0; d <= deg; ++d)
            for (const auto& e : oscrep::compositions(d, static_cast<int>(vars.size()))) {
                Poly p = Poly::constant(cfg.space(), 1);
                for (std::size_t j = 0; j < vars.size(); ++j) p = p * vars[j].pow(e[j]);
                // the shared subring F[X_J1, Y_J3] is visited once
                bool mixed = false;
                for (std::size_t j = cfg.J1().size(); j < cfg.J1().size() + mid.size(); ++j) mixed |= e[j] > 0;
                if (side == 1 && !mixed) continue;
                out.push_back(p);
            }
    }
    return out;
}

}  // namespace

SweepResult identity_sweep(const Config& cfg, int kmax, int v0_degree) {
    SweepResult r;
    auto record = [&](const IdentitySides& s, const std::string& what) {
        ++r.checked;
        if (s.equal()) return;
        ++r.failed;
        if (r.failures.size() < 5) r.failures.push_back(what + ": " + s.lhs.str() + " != " + s.rhs.str());
    };
    auto v0s = admissible_monomials(cfg, v0_degree);
    for (int k = 0; k <= kmax; ++k)
        for (int kk = 0; kk <= k; ++kk) {
            auto w1k = words(cfg.J1(), k), w3kk = words(cfg.J3(), kk);
            auto w1kk = words(cfg.J1(), kk), w3k = words(cfg.J3(), k);
            for (const auto& v : v0s) {
                for (const auto& a : w1k)
                    for (const auto& b : w3kk) record(identity_x(cfg, a, b, v), "x k=" + std::to_string(k) + " v0=" + v.str());
                for (const auto& a : w1kk)
                    for (const auto& b : w3k) record(identity_y(cfg, a, b, v), "y k=" + std::to_string(k) + " v0=" + v.str());
                for (const auto& b : w3kk) record(collapsed_x(cfg, k, b, v), "cx k=" + std::to_string(k) + " v1=" + v.str());
                for (const auto& a : w1kk) record(collapsed_y(cfg, k, a, v), "cy k=" + std::to_string(k) + " v1=" + v.str());
            }
        }
    return r;
}

}  // namespace filtration
