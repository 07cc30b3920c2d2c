#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "detvar/detvar.hpp"

namespace detvar {

bool has_3chain(const std::vector<std::pair<int, int>>& pairs) {
    // sort by j ascending, i descending within equal j, then look for a strictly
    // increasing run of length 3 in the i sequence (patience sorting)
    auto v = pairs;
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second > b.second;
    });
    std::vector<int> tails;
    for (const auto& [j, i] : v) {
        auto it = std::lower_bound(tails.begin(), tails.end(), i);
        if (it == tails.end())
            tails.push_back(i);
        else
            *it = i;
        if (tails.size() >= 3) return true;
    }
    return false;
}

bool has_3chain_bruteforce(const std::vector<std::pair<int, int>>& p) {
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            for (std::size_t c = 0; c < p.size(); ++c) {
                if (a == b || b == c || a == c) continue;
                if (p[a].first < p[b].first && p[b].first < p[c].first && p[a].second < p[b].second &&
                    p[b].second < p[c].second)
                    return true;
            }
    return false;
}

std::vector<int> IndexedMonomial::I1() const {
    auto out = xs;
    for (const auto& z : zs) out.push_back(z.second);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> IndexedMonomial::I3() const {
    auto out = ys;
    for (const auto& z : zs) out.push_back(z.first);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> IndexedMonomial::I(int n) const {
    std::vector<std::pair<int, int>> out;
    for (int i : xs) out.emplace_back(n + 1, i);
    out.insert(out.end(), zs.begin(), zs.end());
    for (int j : ys) out.emplace_back(j, 0);
    return out;
}

std::vector<std::vector<int>> multisets(const std::vector<int>& values, int size) {
    std::vector<int> vals = values;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t k = from; k < vals.size(); ++k) {
            cur.push_back(vals[k]);
            self(self, k, left - 1);
            cur.pop_back();
        }
    };
    if (size >= 0) rec(rec, 0, size);
    return out;
}

namespace {

// Sub-multisets of m with the given size, each sorted.
std::vector<std::vector<int>> sub_multisets(const std::vector<int>& m, int size) {
    std::vector<std::vector<int>> out;
    for (auto& s : multisets(m, size)) {
        bool ok = true;
        for (int v : s)
            ok = ok && std::count(s.begin(), s.end(), v) <= std::count(m.begin(), m.end(), v);
        if (ok) out.push_back(std::move(s));
    }
    return out;
}

std::vector<int> minus(const std::vector<int>& m, const std::vector<int>& s) {
    std::vector<int> out;
    std::multiset<int> rest(m.begin(), m.end());
    for (int v : s) rest.erase(rest.find(v));
    out.assign(rest.begin(), rest.end());
    return out;
}

// Multisets of pairs (j, i) whose row marginal is rows and column marginal is cols.
std::set<std::vector<std::pair<int, int>>> pairings(const std::vector<int>& rows, const std::vector<int>& cols) {
    std::set<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    std::multiset<int> left(rows.begin(), rows.end());
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cols.size()) {
            auto s = cur;
            std::sort(s.begin(), s.end());
            out.insert(s);
            return;
        }
        for (int j : std::set<int>(left.begin(), left.end())) {
            left.erase(left.find(j));
            cur.emplace_back(j, cols[k]);
            self(self, k + 1);
            cur.pop_back();
            left.insert(j);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

std::vector<IndexedMonomial> enumerate_Gset(const ZRing& r, int k1, int k2, int k3, std::vector<int> I1,
                                            std::vector<int> I3) {
    if (!r.extended) throw std::invalid_argument("G-sets live in the extended ring");
    if (k1 < 0 || k2 < 0 || k3 < 0 || static_cast<int>(I1.size()) != k1 + k3 ||
        static_cast<int>(I3.size()) != k2 + k3)
        throw std::invalid_argument("index multiset sizes do not match (k1, k2, k3)");
    for (int i : I1)
        if (!std::binary_search(r.J1.begin(), r.J1.end(), i)) throw std::invalid_argument("I1 outside J1");
    for (int j : I3)
        if (!std::binary_search(r.J3.begin(), r.J3.end(), j)) throw std::invalid_argument("I3 outside J3");
    std::sort(I1.begin(), I1.end());
    std::sort(I3.begin(), I3.end());
    using KeyT = std::tuple<std::vector<int>, std::vector<int>, std::vector<std::pair<int, int>>>;
    std::set<KeyT> found;
    for (const auto& xs : sub_multisets(I1, k1))
        for (const auto& ys : sub_multisets(I3, k2))
            for (const auto& zs : pairings(minus(I3, ys), minus(I1, xs))) {
                IndexedMonomial g{xs, ys, zs, Poly(r.space)};
                if (has_3chain(g.I(r.n))) continue;
                found.emplace(xs, ys, zs);
            }
    std::vector<IndexedMonomial> out;
    for (const auto& [xs, ys, zs] : found) {
        Poly p = Poly::constant(r.space, 1);
        for (int i : xs) p = p * r.x(i);
        for (int j : ys) p = p * r.y(j);
        for (const auto& [j, i] : zs) p = p * r.z(j, i);
        out.push_back({xs, ys, zs, p});
    }
    return out;
}

}  // namespace detvar
