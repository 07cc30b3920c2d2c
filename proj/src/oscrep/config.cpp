#include <map>
#include <mutex>
#include <stdexcept>

#include "oscrep/oscrep.hpp"

namespace oscrep {

void Config::validate() const {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (!(1 <= n1 && n1 <= n2 && n2 <= n)) throw std::invalid_argument("need 1 <= n1 <= n2 <= n");
    if (2 * n > static_cast<int>(exactpoly::kMaxVars)) throw std::invalid_argument("n too large");
}

std::vector<int> Config::J1() const {
    std::vector<int> v;
    for (int i = 1; i <= n1; ++i) v.push_back(i);
    return v;
}

std::vector<int> Config::J2() const {
    std::vector<int> v;
    for (int i = n1 + 1; i <= n2; ++i) v.push_back(i);
    return v;
}

std::vector<int> Config::J3() const {
    std::vector<int> v;
    for (int i = n2 + 1; i <= n; ++i) v.push_back(i);
    return v;
}

Space Config::space() const {
    static std::mutex mu;
    static std::map<int, Space> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& s = cache[n];
    if (!s) s = exactpoly::VarSpace::xy(n);
    return s;
}

std::string Config::str() const {
    return "(n=" + std::to_string(n) + ",n1=" + std::to_string(n1) + ",n2=" + std::to_string(n2) +
           ",l1=" + std::to_string(l1) + ",l2=" + std::to_string(l2) + ")";
}

std::string Generator::str() const {
    if (kind == Cartan) return "H" + std::to_string(i);
    return "E" + std::to_string(i) + "_" + std::to_string(j);
}

std::vector<Generator> all_generators(int n) {
    std::vector<Generator> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) out.push_back(Generator::root(i, j));
    for (int r = 1; r < n; ++r) out.push_back(Generator::cartan(r));
    return out;
}

int generator_index(int n, const Generator& g) {
    if (g.kind == Generator::Cartan) {
        if (g.i < 1 || g.i >= n) throw std::out_of_range("Cartan index");
        return n * (n - 1) + g.i - 1;
    }
    if (g.i < 1 || g.i > n || g.j < 1 || g.j > n || g.i == g.j) throw std::out_of_range("root index");
    return (g.i - 1) * (n - 1) + (g.j < g.i ? g.j - 1 : g.j - 2);
}

Generator generator_at(int n, int index) {
    if (index < 0 || index >= n * n - 1) throw std::out_of_range("generator index");
    if (index >= n * (n - 1)) return Generator::cartan(index - n * (n - 1) + 1);
    int i = index / (n - 1) + 1;
    int j = index % (n - 1) + 1;
    if (j >= i) ++j;
    return Generator::root(i, j);
}

bool classify_irreducible(const Config& cfg) {
    cfg.validate();
    const int n = cfg.n, n1 = cfg.n1, n2 = cfg.n2, l1 = cfg.l1, l2 = cfg.l2;
    if (n1 + 1 < n2) {
        bool a = l1 + l2 <= n1 - n2 + 1;
        bool b = n2 == n && l1 >= 0 && l2 == 0;
        bool c = n2 == n && l2 >= 0 && l1 >= n1 - n + 2;
        return a || b || c;
    }
    if (n1 + 1 == n2) return l1 + l2 <= 0 || (n2 == n && 0 <= l2 && l2 <= l1);
    if (l1 + l2 > 0) return false;
    bool a = l2 <= 0 && n1 < n - 1 && n >= 3;
    bool b = l1 <= 0 && 1 < n1 && n1 < n && n >= 3;
    bool c = l1 <= 0 && l2 <= 0 && n1 == 1 && n == 2;
    return a || b || c;
}

}  // namespace oscrep
