#include <algorithm>
#include <stdexcept>

#include "filtration/filtration.hpp"

namespace filtration {

std::map<std::vector<int>, std::vector<Poly>> GradedSpan::split(const Poly& p) const {
    std::map<std::vector<int>, std::vector<exactpoly::Term>> terms;
    for (const auto& t : p.terms()) terms[oscrep::gl_weight(cfg_, t.first)].push_back(t);
    std::map<std::vector<int>, std::vector<Poly>> out;
    for (auto& [w, ts] : terms) out[w].emplace_back(p.space(), std::move(ts));
    return out;
}

std::size_t GradedSpan::limit(const Part& part, int level) const {
    if (level < 0 || level >= levels()) return part.row_level.size();
    return static_cast<std::size_t>(
        std::upper_bound(part.row_level.begin(), part.row_level.end(), level) - part.row_level.begin());
}

bool GradedSpan::insert(const Poly& p) {
    if (p.is_zero()) return false;
    auto w = oscrep::gl_weight(cfg_, p.lead());
    for (const auto& t : p.terms())
        if (oscrep::gl_weight(cfg_, t.first) != w) throw std::invalid_argument("polynomial is not a weight vector");
    Part& part = parts_[w];
    if (!part.ech.insert(exactpoly::to_ivec(p))) return false;
    part.row_level.push_back(levels());
    ++total_;
    return true;
}

void GradedSpan::insert_components(const Poly& p) {
    for (auto& [w, ps] : split(p))
        for (auto& q : ps) insert(q);
}

void GradedSpan::close_level() { level_dims_.push_back(total_); }

std::size_t GradedSpan::dim(int level) const {
    if (level < 0 || level >= levels()) return total_;
    return level_dims_[static_cast<std::size_t>(level)];
}

Poly GradedSpan::reduce(const Poly& p, int level) const {
    exactpoly::PolyBuilder out(p.space());
    for (auto& [w, ps] : split(p)) {
        auto it = parts_.find(w);
        for (const auto& q : ps) {
            if (it == parts_.end()) {
                out.add(q);
                continue;
            }
            Q s;
            auto r = it->second.ech.reduce(exactpoly::to_ivec(q, &s), limit(it->second, level));
            Q total = r.scale * s;
            for (auto& t : r.w) out.add(t.first, Q(t.second) / total);
        }
    }
    return out.finish();
}

bool GradedSpan::contains(const Poly& p, int level) const {
    for (auto& [w, ps] : split(p)) {
        auto it = parts_.find(w);
        if (it == parts_.end()) return false;
        if (!it->second.ech.contains(exactpoly::to_ivec(ps.front()), limit(it->second, level))) return false;
    }
    return true;
}

namespace {

Poly to_poly(const exactpoly::Space& s, const exactpoly::IVec<Mono>& r) {
    std::vector<exactpoly::Term> ts;
    ts.reserve(r.size());
    for (const auto& t : r) ts.emplace_back(t.first, Q(t.second));
    return Poly(s, std::move(ts));
}

}  // namespace

std::vector<Poly> GradedSpan::rows(int level) const {
    std::vector<Poly> out;
    auto s = cfg_.space();
    for (const auto& [w, part] : parts_) {
        std::size_t lim = limit(part, level);
        for (std::size_t i = 0; i < lim; ++i) out.push_back(to_poly(s, part.ech.rows()[i]));
    }
    return out;
}

std::vector<Poly> GradedSpan::level_rows(int level) const {
    std::vector<Poly> out;
    auto s = cfg_.space();
    for (const auto& [w, part] : parts_)
        for (std::size_t i = 0; i < part.row_level.size(); ++i)
            if (part.row_level[i] == level) out.push_back(to_poly(s, part.ech.rows()[i]));
    return out;
}

bool GradedSpan::subspace_of(const GradedSpan& o, int level, int o_level) const {
    for (const auto& [w, part] : parts_) {
        std::size_t lim = limit(part, level);
        if (lim == 0) continue;
        auto it = o.parts_.find(w);
        if (it == o.parts_.end()) return false;
        std::size_t olim = o.limit(it->second, o_level);
        for (std::size_t i = 0; i < lim; ++i)
            if (!it->second.ech.contains(part.ech.rows()[i], olim)) return false;
    }
    return true;
}

}  // namespace filtration
