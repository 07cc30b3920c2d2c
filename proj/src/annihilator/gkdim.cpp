#include <stdexcept>

#include "annihilator/annihilator.hpp"

namespace annihilator {

int gk_expected(const Config& cfg) {
    cfg.validate();
    const int n = cfg.n, n1 = cfg.n1, n2 = cfg.n2;
    if (n1 != n2 && n2 != n) return 2 * n - 3;
    if (n1 == n2 && 1 < n1 && n1 < n - 1) return 2 * n - 4;
    return n - 1;
}

GKEstimate gkdim_estimate(const std::vector<std::size_t>& dims) {
    if (dims.size() < 7) throw std::invalid_argument("need at least 7 dimensions for a GK estimate");
    std::vector<long long> diff = filtration::hilbert_sequence(dims);
    GKEstimate out;
    for (int d = 0; !diff.empty(); ++d) {
        int zeros = 0;
        for (auto it = diff.rbegin(); it != diff.rend() && *it == 0; ++it) ++zeros;
        if (zeros >= 1) {
            out.d = d;
            out.trailing_zeros = zeros;
            out.confident = zeros >= 2;
            return out;
        }
        std::vector<long long> next;
        for (std::size_t k = 1; k < diff.size(); ++k) next.push_back(diff[k] - diff[k - 1]);
        diff = std::move(next);
    }
    return out;
}

}  // namespace annihilator
