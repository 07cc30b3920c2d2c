#include "exactpoly/poly.hpp"

#include <algorithm>
#include <sstream>

namespace exactpoly {

namespace {

bool term_greater(const Term& a, const Term& b) { return b.first < a.first; }

}  // namespace

Poly::Poly(Space s, std::vector<Term> sorted_terms) : space_(std::move(s)), terms_(std::move(sorted_terms)) {}

Poly Poly::constant(Space s, const Q& c) {
    Poly p(std::move(s));
    if (c != 0) p.terms_.emplace_back(Mono{}, c);
    if (!p.terms_.empty()) p.terms_.back().second.canonicalize();
    return p;
}

Poly Poly::var(Space s, int v) {
    if (v < 0 || v >= s->nvars()) throw std::out_of_range("unknown variable");
    Mono m;
    m.set(static_cast<std::size_t>(v), 1);
    return monomial(std::move(s), m);
}

Poly Poly::monomial(Space s, const Mono& m, const Q& c) {
    Poly p(std::move(s));
    if (c != 0) p.terms_.emplace_back(m, c);
    if (!p.terms_.empty()) p.terms_.back().second.canonicalize();
    return p;
}

Q Poly::coeff(const Mono& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, term_greater);
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.deg));
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    require_same(space_, o.space_);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && b->first < a->first)) {
            out.push_back(*a++);
        } else if (a == terms_.end() || a->first < b->first) {
            out.push_back(*b++);
        } else {
            Q c = a->second + b->second;
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    return Poly(space_, std::move(out));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Q& c) const {
    if (c == 0) return Poly(space_);
    Q cc = c;
    cc.canonicalize();
    Poly r = *this;
    for (auto& t : r.terms_) t.second *= cc;
    return r;
}

Poly Poly::mul_mono(const Mono& m, const Q& c) const {
    if (c == 0) return Poly(space_);
    Poly r = *this;
    for (auto& t : r.terms_) {
        t.first = t.first * m;
        t.second *= c;
    }
    return r;  // multiplication by a monomial preserves the order
}

Poly Poly::operator*(const Poly& o) const {
    require_same(space_, o.space_);
    if (terms_.size() == 1) return o.mul_mono(terms_[0].first, terms_[0].second);
    if (o.terms_.size() == 1) return mul_mono(o.terms_[0].first, o.terms_[0].second);
    PolyBuilder b(space_);
    for (const auto& s : terms_)
        for (const auto& t : o.terms_) b.add(s.first * t.first, s.second * t.second);
    return b.finish();
}

Poly Poly::pow(int e) const {
    Poly r = constant(space_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool Poly::operator==(const Poly& o) const {
    require_same(space_, o.space_);
    return terms_ == o.terms_;
}

Poly Poly::diff(int v) const {
    if (v < 0 || v >= space_->nvars()) throw std::out_of_range("unknown variable");
    auto idx = static_cast<std::size_t>(v);
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int a = t.first[idx];
        if (a == 0) continue;
        Mono m = t.first;
        m.set(idx, a - 1);
        out.emplace_back(m, t.second * a);
    }
    // lowering one exponent may reorder terms of equal degree
    std::sort(out.begin(), out.end(), term_greater);
    return Poly(space_, std::move(out));
}

Poly Poly::substitute(const std::map<int, Poly>& assignment, const Space& target) const {
    for (const auto& [v, img] : assignment) {
        if (v < 0 || v >= space_->nvars()) throw std::out_of_range("unknown variable");
        require_same(img.space(), target);
    }
    if (space_->nvars() > target->nvars() && assignment.size() < static_cast<std::size_t>(space_->nvars()))
        for (int v = target->nvars(); v < space_->nvars(); ++v)
            if (!assignment.count(v))
                for (const auto& t : terms_)
                    if (t.first[static_cast<std::size_t>(v)]) throw std::out_of_range("variable missing in target");
    std::map<std::pair<int, int>, Poly> powers;
    auto power = [&](int v, int e) -> const Poly& {
        for (int k = 1; k <= e; ++k) {
            if (powers.count({v, k})) continue;
            Poly p = k == 1 ? assignment.at(v) : powers.at({v, k - 1}) * assignment.at(v);
            powers.emplace(std::make_pair(v, k), std::move(p));
        }
        return powers.at({v, e});
    };
    PolyBuilder out(target);
    for (const auto& t : terms_) {
        Mono keep;
        Poly acc = constant(target, t.second);
        for (int v = 0; v < space_->nvars(); ++v) {
            int e = t.first[static_cast<std::size_t>(v)];
            if (!e) continue;
            if (assignment.count(v))
                acc = acc * power(v, e);
            else
                keep.set(static_cast<std::size_t>(v), e);
        }
        out.add(acc.mul_mono(keep), 1);
    }
    return out.finish();
}

std::string mono_str(const VarSpace& s, const Mono& m) {
    std::string out;
    for (int v = 0; v < s.nvars(); ++v) {
        int e = m[static_cast<std::size_t>(v)];
        if (!e) continue;
        if (!out.empty()) out += '*';
        out += s.name(v);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::vector<Mono> monomials_of_degree(int nvars, int d) {
    std::vector<Mono> out;
    Mono cur;
    auto rec = [&](auto&& self, int v, int left) -> void {
        if (v == nvars - 1 || left == 0) {
            if (v < nvars) cur.set(static_cast<std::size_t>(v), left);
            out.push_back(cur);
            if (v < nvars) cur.set(static_cast<std::size_t>(v), 0);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur.set(static_cast<std::size_t>(v), e);
            self(self, v + 1, left - e);
        }
        cur.set(static_cast<std::size_t>(v), 0);
    };
    if (nvars == 0) {
        if (d == 0) out.push_back(cur);
        return out;
    }
    rec(rec, 0, d);
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Q a = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (m.deg == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += mono_str(*space_, m);
        }
    }
    return out;
}

void PolyBuilder::add(const Mono& m, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = acc_.try_emplace(m, c);
    if (fresh) {
        it->second.canonicalize();
    } else {
        Q cc = c;
        cc.canonicalize();
        it->second += cc;
        if (it->second == 0) acc_.erase(it);
    }
}

void PolyBuilder::add(const Poly& p, const Q& c) {
    require_same(space_, p.space());
    for (const auto& t : p.terms()) add(t.first, t.second * c);
}

Poly PolyBuilder::finish() {
    std::vector<Term> out;
    out.reserve(acc_.size());
    for (auto& [m, c] : acc_) out.emplace_back(m, std::move(c));
    acc_.clear();
    std::sort(out.begin(), out.end(), term_greater);
    return Poly(space_, std::move(out));
}

}  // namespace exactpoly
