#include "exactpoly/echelon.hpp"

namespace exactpoly {

IVec<Mono> to_ivec(const Poly& p, Q* scale) {
    Z l = 1;
    for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
    IVec<Mono> v;
    v.reserve(p.size());
    for (const auto& t : p.terms()) {
        Z c = l / t.second.get_den();
        c *= t.second.get_num();
        v.emplace_back(t.first, std::move(c));
    }
    if (scale) *scale = Q(l);
    return v;
}

bool EchelonBasis::insert(const Poly& p) {
    require_same(space_, p.space());
    return core_.insert(to_ivec(p));
}

bool EchelonBasis::contains(const Poly& p) const {
    require_same(space_, p.space());
    return core_.contains(to_ivec(p));
}

Poly EchelonBasis::reduce(const Poly& p) const {
    require_same(space_, p.space());
    Q s;
    auto r = core_.reduce(to_ivec(p, &s));
    Q total = r.scale * s;
    std::vector<Term> out;
    out.reserve(r.w.size());
    for (auto& t : r.w) out.emplace_back(t.first, Q(t.second) / total);
    return Poly(space_, std::move(out));
}

std::vector<Poly> EchelonBasis::rows() const {
    std::vector<Poly> out;
    for (const auto& r : core_.rows()) {
        std::vector<Term> ts;
        for (const auto& t : r) ts.emplace_back(t.first, Q(t.second));
        out.emplace_back(space_, std::move(ts));
    }
    return out;
}

std::vector<Poly> EchelonBasis::canonical_rows() const {
    std::vector<Poly> out;
    for (auto& r : core_.canonical()) out.emplace_back(space_, std::vector<Term>(r.begin(), r.end()));
    return out;
}

bool EchelonBasis::subspace_of(const EchelonBasis& o) const {
    require_same(space_, o.space_);
    for (const auto& r : core_.rows())
        if (!o.core_.contains(r)) return false;
    return true;
}

bool EchelonBasis::same_span(const EchelonBasis& o) const {
    return dim() == o.dim() && subspace_of(o) && o.subspace_of(*this);
}

EchelonBasis kernel_of_map(const std::vector<Poly>& domain, const std::function<Poly(const Poly&)>& map,
                           const Space& domain_space) {
    std::vector<IVec<Mono>> images;
    images.reserve(domain.size());
    for (const auto& d : domain) images.push_back(to_ivec(map(d)));
    auto ker = kernel_vectors<Mono, MonoHash>(images);
    EchelonBasis out(domain_space);
    for (const auto& combo : ker) {
        PolyBuilder b(domain_space);
        for (const auto& [i, c] : combo) b.add(domain[i], Q(c));
        out.insert(b.finish());
    }
    return out;
}

}  // namespace exactpoly
