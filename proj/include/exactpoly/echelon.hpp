#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "exactpoly/poly.hpp"

namespace exactpoly {

// Sparse integer vector, keys strictly decreasing.
template <class Key>
using IVec = std::vector<std::pair<Key, Z>>;

namespace detail {

template <class Key>
void make_primitive(IVec<Key>& v) {
    if (v.empty()) return;
    Z g = 0;
    for (const auto& t : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
        if (g == 1) break;
    }
    if (v.front().second < 0) g = -g;
    if (g != 1)
        for (auto& t : v) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
}

// w <- a*w - c*row where the leading entries of the tail starting at pos cancel.
template <class Key>
void eliminate(IVec<Key>& w, std::size_t pos, const Z& a, const Z& c, const IVec<Key>& row) {
    IVec<Key> out;
    out.reserve(w.size() + row.size());
    for (std::size_t i = 0; i < pos; ++i) {
        out.emplace_back(std::move(w[i].first), std::move(w[i].second));
        if (a != 1) out.back().second *= a;
    }
    std::size_t i = pos + 1, j = 1;
    Z tmp;
    while (i < w.size() || j < row.size()) {
        if (j == row.size() || (i < w.size() && row[j].first < w[i].first)) {
            out.emplace_back(std::move(w[i].first), std::move(w[i].second));
            if (a != 1) out.back().second *= a;
            ++i;
        } else if (i == w.size() || w[i].first < row[j].first) {
            out.emplace_back(row[j].first, -c * row[j].second);
            ++j;
        } else {
            tmp = a * w[i].second - c * row[j].second;
            if (tmp != 0) out.emplace_back(std::move(w[i].first), tmp);
            ++i;
            ++j;
        }
    }
    w = std::move(out);
}

}  // namespace detail

// Semi-echelon integer row space: rows are primitive, leading coefficient
// positive, pairwise distinct leading keys, and each row is fully reduced
// against the rows inserted before it.
template <class Key, class Hash = std::hash<Key>>
class EchelonT {
public:
    struct Reduced {
        IVec<Key> w;  // w = scale * (v - element of span), no pivot keys remain
        Q scale = 1;
    };

    std::size_t size() const { return rows_.size(); }
    const std::vector<IVec<Key>>& rows() const { return rows_; }
    bool has_pivot(const Key& k) const { return pivot_.count(k) != 0; }

    // Only rows with index < limit take part, so any prefix acts as its own basis.
    Reduced reduce(IVec<Key> v, std::size_t limit = static_cast<std::size_t>(-1)) const {
        Reduced r;
        r.w = std::move(v);
        std::size_t pos = 0, since_content = 0;
        Z g, a, c;
        while (pos < r.w.size()) {
            auto it = pivot_.find(r.w[pos].first);
            if (it == pivot_.end() || it->second >= limit) {
                ++pos;
                continue;
            }
            const auto& row = rows_[it->second];
            mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), r.w[pos].second.get_mpz_t());
            mpz_divexact(a.get_mpz_t(), row.front().second.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(c.get_mpz_t(), r.w[pos].second.get_mpz_t(), g.get_mpz_t());
            detail::eliminate(r.w, pos, a, c, row);
            if (a != 1) {
                r.scale *= a;
                if (++since_content >= 4) {
                    since_content = 0;
                    shrink(r);
                }
            }
        }
        shrink(r);
        return r;
    }

    bool contains(IVec<Key> v, std::size_t limit = static_cast<std::size_t>(-1)) const {
        return reduce(std::move(v), limit).w.empty();
    }

    bool insert(IVec<Key> v) {
        auto r = reduce(std::move(v));
        if (r.w.empty()) return false;
        detail::make_primitive(r.w);
        pivot_.emplace(r.w.front().first, rows_.size());
        rows_.push_back(std::move(r.w));
        return true;
    }

    // Reduced row echelon form with unit pivots, rows by decreasing pivot.
    std::vector<std::vector<std::pair<Key, Q>>> canonical() const {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return rows_[a].front().first < rows_[b].front().first; });
        EchelonT done;
        for (std::size_t i : order) done.insert(rows_[i]);
        std::vector<std::vector<std::pair<Key, Q>>> out;
        for (auto it = done.rows_.rbegin(); it != done.rows_.rend(); ++it) {
            std::vector<std::pair<Key, Q>> row;
            Q lead(it->front().second);
            for (const auto& t : *it) row.emplace_back(t.first, Q(t.second) / lead);
            out.push_back(std::move(row));
        }
        return out;
    }

private:
    static void shrink(Reduced& r) {
        if (r.w.empty()) return;
        Z g = 0;
        for (const auto& t : r.w) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
            if (g == 1) return;
        }
        for (auto& t : r.w) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
        r.scale /= g;
    }

    std::vector<IVec<Key>> rows_;
    std::unordered_map<Key, std::size_t, Hash> pivot_;
};

// Convert a rational polynomial to a primitive-free integer vector (denominators cleared).
IVec<Mono> to_ivec(const Poly& p, Q* scale = nullptr);

// Row space of polynomials in a fixed VarSpace.
class EchelonBasis {
public:
    explicit EchelonBasis(Space s) : space_(std::move(s)) {}

    const Space& space() const { return space_; }
    std::size_t dim() const { return core_.size(); }
    bool insert(const Poly& p);
    bool contains(const Poly& p) const;
    Poly reduce(const Poly& p) const;  // unique normal form
    std::vector<Poly> rows() const;
    std::vector<Poly> canonical_rows() const;
    bool has_pivot(const Mono& m) const { return core_.has_pivot(m); }
    bool same_span(const EchelonBasis& o) const;
    bool subspace_of(const EchelonBasis& o) const;

private:
    Space space_;
    EchelonT<Mono, MonoHash> core_;
};

// Kernel of a linear map given on a list of domain elements: returns the span of
// all combinations sum c_i * domain[i] whose image vanishes.
EchelonBasis kernel_of_map(const std::vector<Poly>& domain, const std::function<Poly(const Poly&)>& map,
                           const Space& domain_space);

// Generic kernel: images given as integer vectors; returns coefficient vectors
// (indices into images) spanning the kernel.
template <class Key, class Hash = std::hash<Key>>
std::vector<std::vector<std::pair<std::size_t, Z>>> kernel_vectors(const std::vector<IVec<Key>>& images) {
    struct Row {
        IVec<Key> v;
        std::vector<std::pair<std::size_t, Z>> combo;  // sorted by index descending
    };
    std::vector<Row> rows;
    std::unordered_map<Key, std::size_t, Hash> pivot;
    std::vector<std::vector<std::pair<std::size_t, Z>>> kernel;
    Z g, a, c;
    for (std::size_t idx = 0; idx < images.size(); ++idx) {
        IVec<Key> w = images[idx];
        IVec<std::size_t> combo{{idx, Z(1)}};
        while (!w.empty()) {
            auto it = pivot.find(w.front().first);
            if (it == pivot.end()) break;
            const Row& r = rows[it->second];
            mpz_gcd(g.get_mpz_t(), r.v.front().second.get_mpz_t(), w.front().second.get_mpz_t());
            mpz_divexact(a.get_mpz_t(), r.v.front().second.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(c.get_mpz_t(), w.front().second.get_mpz_t(), g.get_mpz_t());
            detail::eliminate(w, 0, a, c, r.v);
            IVec<std::size_t> rc(r.combo.begin(), r.combo.end());
            rc.insert(rc.begin(), {std::size_t(-1), Z(0)});  // dummy head for eliminate
            IVec<std::size_t> cc;
            cc.emplace_back(std::size_t(-1), Z(0));
            cc.insert(cc.end(), combo.begin(), combo.end());
            detail::eliminate(cc, 0, a, c, rc);
            combo = std::move(cc);
            // common content of (w, combo)
            Z cg = 0;
            for (const auto& t : w) mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), t.second.get_mpz_t());
            for (const auto& t : combo) mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), t.second.get_mpz_t());
            if (cg > 1) {
                for (auto& t : w) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), cg.get_mpz_t());
                for (auto& t : combo) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), cg.get_mpz_t());
            }
        }
        if (w.empty()) {
            kernel.emplace_back(combo.begin(), combo.end());
        } else {
            if (w.front().second < 0) {
                for (auto& t : w) t.second = -t.second;
                for (auto& t : combo) t.second = -t.second;
            }
            pivot.emplace(w.front().first, rows.size());
            rows.push_back({std::move(w), {combo.begin(), combo.end()}});
        }
    }
    return kernel;
}

}  // namespace exactpoly
