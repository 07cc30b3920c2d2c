#include <functional>

#include "detvar/detvar.hpp"

namespace detvar {

namespace {

KernelComparison compare(const std::string& name, const ZRing& r, int d,
                         const std::function<Poly(const Poly&)>& map, const exactpoly::EchelonBasis& ideal) {
    std::vector<Poly> domain;
    for (const auto& m : r.monomials(d)) domain.push_back(Poly::monomial(r.space, m));
    auto ker = exactpoly::kernel_of_map(domain, map, r.space);
    KernelComparison c;
    c.map = name;
    c.degree = d;
    c.kernel_dim = ker.dim();
    c.ideal_dim = ideal.dim();
    c.kernel_in_ideal = ker.subspace_of(ideal);
    c.ideal_in_kernel = ideal.subspace_of(ker);
    return c;
}

}  // namespace

std::vector<KernelComparison> verify_phi_xy_kernel(int n, const std::vector<int>& J1, const std::vector<int>& J3, int rmax) {
    ZRing r = ZRing::pure(n, J1, J3);
    auto gens = minor_generators(r, 2, r.J3, r.J1);
    std::vector<KernelComparison> out;
    for (int d = 0; d <= rmax; ++d) {
        auto ideal = ideal_piece(r, gens, 2, d);
        out.push_back(compare("phi_x", r, d, [&](const Poly& p) { return phi_x(r, p); }, ideal));
        out.push_back(compare("phi_y", r, d, [&](const Poly& p) { return phi_y(r, p); }, ideal));
    }
    return out;
}

std::vector<GsetCheck> verify_gset_rank(int n, const std::vector<int>& J1, const std::vector<int>& J3, int max_total) {
    ZRing r = ZRing::extended_ring(n, J1, J3);
    std::vector<GsetCheck> out;
    for (int total = 1; total <= max_total; ++total)
        for (int k3 = 0; k3 <= total; ++k3)
            for (int k1 = 0; k1 <= total - k3; ++k1) {
                int k2 = total - k3 - k1;
                for (const auto& I1 : multisets(r.J1, k1 + k3))
                    for (const auto& I3 : multisets(r.J3, k2 + k3)) {
                        auto g = enumerate_Gset(r, k1, k2, k3, I1, I3);
                        exactpoly::EchelonBasis img(r.target);
                        for (const auto& m : g) img.insert(phi(r, m.poly));
                        out.push_back({k1, k2, k3, I1, I3, g.size(), img.dim()});
                    }
            }
    return out;
}

std::vector<KernelComparison> verify_phi_kernel(int n, const std::vector<int>& J1, const std::vector<int>& J3, int kmax) {
    ZRing r = ZRing::extended_ring(n, J1, J3);
    auto gens = minor_generators(r, 3, r.rows(), r.cols());
    std::vector<KernelComparison> out;
    for (int d = 0; d <= kmax; ++d)
        out.push_back(compare("phi", r, d, [&](const Poly& p) { return phi(r, p); }, ideal_piece(r, gens, 3, d)));
    return out;
}

}  // namespace detvar
