#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "oscrep/oscrep.hpp"

namespace oscrep {

GradedKey grading(const Config& cfg, const Mono& m) {
    GradedKey g;
    for (int i = 1; i <= cfg.n; ++i) {
        int a = m[static_cast<std::size_t>(i - 1)], b = m[static_cast<std::size_t>(cfg.n + i - 1)];
        g.l1 += cfg.block(i) == 1 ? -a : a;
        g.l2 += cfg.block(i) == 3 ? -b : b;
    }
    return g;
}

int dfun_mono(const Config& cfg, const Mono& m) {
    int d = 0;
    for (int i = 1; i <= cfg.n; ++i) {
        int a = m[static_cast<std::size_t>(i - 1)], b = m[static_cast<std::size_t>(cfg.n + i - 1)];
        switch (cfg.block(i)) {
            case 1: d += 2 * b; break;
            case 2: d += a + b; break;
            default: d += 2 * a;
        }
    }
    return d - (cfg.l1 + std::abs(cfg.l1) + cfg.l2 + std::abs(cfg.l2)) / 2;
}

int dfun(const Config& cfg, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("degree of zero polynomial");
    int d = 0;
    for (const auto& t : f.terms()) {
        if (!(grading(cfg, t.first) == GradedKey{cfg.l1, cfg.l2}))
            throw std::invalid_argument("polynomial outside the declared grading");
        d = std::max(d, dfun_mono(cfg, t.first));
    }
    return d;
}

int dprime(const Config& cfg, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("degree of zero polynomial");
    int d = 0;
    for (const auto& t : f.terms()) {
        int s = 0;
        for (int i = 1; i <= cfg.n1; ++i) s += t.first[static_cast<std::size_t>(i - 1)];
        d = std::max(d, s);
    }
    return d;
}

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    if (total < 0) return out;
    if (parts == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    // iterate in reverse lex order so that earlier variables get larger exponents first
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == parts - 1) {
            cur[static_cast<std::size_t>(idx)] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

std::vector<Mono> enumerate_N(const Config& cfg, const std::array<int, 6>& ks) {
    std::vector<Mono> out;
    for (int k : ks)
        if (k < 0) return out;
    const std::vector<int> blocks[3] = {cfg.J1(), cfg.J2(), cfg.J3()};
    std::vector<std::vector<std::vector<int>>> parts;
    for (int t = 0; t < 6; ++t) parts.push_back(compositions(ks[static_cast<std::size_t>(t)],
                                                             static_cast<int>(blocks[t % 3].size())));
    const bool constrain = cfg.n1 < cfg.n2;
    const std::size_t cpos = 0;  // n1+1 is the first index of J2
    for (const auto& a1 : parts[0])
        for (const auto& a2 : parts[1])
            for (const auto& a3 : parts[2])
                for (const auto& b1 : parts[3])
                    for (const auto& b2 : parts[4]) {
                        if (constrain && a2[cpos] && b2[cpos]) continue;
                        for (const auto& b3 : parts[5]) {
                            Mono m;
                            const std::vector<int>* av[3] = {&a1, &a2, &a3};
                            const std::vector<int>* bv[3] = {&b1, &b2, &b3};
                            for (int t = 0; t < 3; ++t)
                                for (std::size_t q = 0; q < blocks[t].size(); ++q) {
                                    int idx = blocks[t][q];
                                    m.set(static_cast<std::size_t>(idx - 1), (*av[t])[q]);
                                    m.set(static_cast<std::size_t>(cfg.n + idx - 1), (*bv[t])[q]);
                                }
                            out.push_back(m);
                        }
                    }
    std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) { return b < a; });
    return out;
}

std::vector<Mono> enumerate_TN_level(const Config& cfg, int k) {
    if (cfg.n1 >= cfg.n2) throw std::invalid_argument("TN levels need n1 < n2");
    std::vector<Mono> out;
    const int S = (cfg.l1 + std::abs(cfg.l1) + cfg.l2 + std::abs(cfg.l2)) / 2;
    const int budget = k + S;
    if (k < 0) return out;
    const bool has3 = cfg.n2 < cfg.n;
    for (int a3 = 0; 2 * a3 <= budget; ++a3) {
        if (!has3 && a3) break;
        for (int b1 = 0; 2 * a3 + 2 * b1 <= budget; ++b1)
            for (int a2 = 0; 2 * a3 + 2 * b1 + a2 <= budget; ++a2) {
                int b2 = budget - 2 * a3 - 2 * b1 - a2;
                int a1 = a2 + a3 - cfg.l1;
                int b3 = b1 + b2 - cfg.l2;
                if (a1 < 0 || b3 < 0) continue;
                if (!has3 && b3) continue;
                auto part = enumerate_N(cfg, {a1, a2, a3, b1, b2, b3});
                out.insert(out.end(), part.begin(), part.end());
            }
    }
    std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) { return b < a; });
    return out;
}

}  // namespace oscrep
