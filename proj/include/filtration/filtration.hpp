#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "exactpoly/echelon.hpp"
#include "oscrep/oscrep.hpp"

namespace filtration {

using exactpoly::Mono;
using exactpoly::MonoHash;
using exactpoly::Poly;
using exactpoly::Q;
using oscrep::Config;

// Row space of gl-weight homogeneous polynomials, stored per weight, with
// nested levels: level k consists of every row inserted before the (k+1)-st
// call to close_level().
class GradedSpan {
public:
    explicit GradedSpan(Config cfg) : cfg_(cfg) {}

    const Config& config() const { return cfg_; }

    // Throws std::invalid_argument when p mixes weights.
    bool insert(const Poly& p);
    // Inserts each weight component of p separately.
    void insert_components(const Poly& p);
    void close_level();

    int levels() const { return static_cast<int>(level_dims_.size()); }
    // level -1 means every inserted row.
    std::size_t dim(int level = -1) const;
    bool contains(const Poly& p, int level = -1) const;
    // Unique normal form of p modulo the span of the level.
    Poly reduce(const Poly& p, int level = -1) const;
    std::vector<Poly> rows(int level = -1) const;
    // Rows added exactly at this level.
    std::vector<Poly> level_rows(int level) const;
    bool subspace_of(const GradedSpan& o, int level = -1, int o_level = -1) const;

private:
    struct Part {
        exactpoly::EchelonT<Mono, MonoHash> ech;
        std::vector<int> row_level;
    };
    std::size_t limit(const Part& part, int level) const;
    std::map<std::vector<int>, std::vector<Poly>> split(const Poly& p) const;

    Config cfg_;
    std::map<std::vector<int>, Part> parts_;
    std::vector<std::size_t> level_dims_;
    std::size_t total_ = 0;
};

enum class Regime {
    SignedTN,      // n1 < n2 and l1 <= 0 or l2 <= 0
    PositiveFull,  // n1 < n2 = n and l1, l2 > 0
    EqualMonomial, // n1 = n2, l1, l2 <= 0
    EqualAltJ1,    // n1 = n2, l1 + l2 <= 0 <= l2
    EqualAltJ3,    // n1 = n2, l1 + l2 <= 0 <= l1
    Unsupported
};
Regime regime(const Config& cfg);
std::string regime_name(Regime r);

enum class Method { BruteForce, ExplicitV, ExplicitVPrime, N1EqualsN2Span };
std::string method_name(Method m);
Method explicit_method(const Config& cfg);  // throws for unsupported regimes

struct Tower {
    Config cfg;
    Method method = Method::BruteForce;
    GradedSpan span;
    std::vector<std::size_t> dims;

    explicit Tower(const Config& c, Method m = Method::BruteForce) : cfg(c), method(m), span(c) {}
    int depth() const { return static_cast<int>(dims.size()) - 1; }
};

using Progress = std::function<void(int level, std::size_t dim)>;

// x_{i1}x_{i3} - y_{i1}y_{i3}, i1 in J1 (outer), i3 in J3 (inner).
std::vector<Poly> pset(const Config& cfg);

std::vector<Poly> m0_generators(const Config& cfg);
GradedSpan build_M0(const Config& cfg);

// Appends level depth+1 = g(level depth) to a brute-force tower.
void bruteforce_extend(Tower& t);
Tower bruteforce_tower(const Config& cfg, int kmax, const Progress& progress = {});

// Spanning set of V_k (or V'_k, or the n1 = n2 product span).
std::vector<Poly> explicit_generators(const Config& cfg, int k);
GradedSpan explicit_Vk(const Config& cfg, int k);
// Cumulative tower whose level k is the sum of the explicit spans up to k.
Tower explicit_tower(const Config& cfg, int kmax, const Progress& progress = {});

struct LevelComparison {
    int k = 0;
    std::size_t dim_bruteforce = 0, dim_explicit = 0;
    bool explicit_in_bruteforce = false, bruteforce_in_explicit = false;
    bool pass() const { return explicit_in_bruteforce && bruteforce_in_explicit; }
};
std::vector<LevelComparison> verify_tower_agreement(const Config& cfg, int kmax, const Tower* brute = nullptr);

std::vector<long long> hilbert_sequence(const std::vector<std::size_t>& dims);
std::vector<long long> hilbert_sequence(const Tower& t);

// Minimal s with f in Span{TN_k, TN(k-r)P^r : 1 <= r <= s}; throws if f is not in V_k.
int p_order(const Config& cfg, int k, const Poly& f);
// TN_k alone (the s = 0 span) and the partial spans used by p_order.
GradedSpan partial_Vk(const Config& cfg, int k, int s);

// Ordered product of operators E_{i,j} applied right to left: ops.back() acts first.
Poly apply_word(const Config& cfg, const std::vector<std::pair<int, int>>& ops, const Poly& f);

// Both sides of the raising-word identities.
struct IdentitySides {
    Poly lhs, rhs;
    bool equal() const { return lhs == rhs; }
};
// x-form: k E_{c,i1} factors, k13 E_{i3,c} factors; i1s.size() == k, i3s.size() == k13.
IdentitySides identity_x(const Config& cfg, const std::vector<int>& i1s, const std::vector<int>& i3s, const Poly& v0);
// y-form: k21 E_{c,i1} factors, k E_{i3,c} factors; i1s.size() == k21, i3s.size() == k.
IdentitySides identity_y(const Config& cfg, const std::vector<int>& i1s, const std::vector<int>& i3s, const Poly& v0);
// Collapsed forms: E_{i3,c} word on v1 x_c^k, and E_{c,i1} word on v1 y_c^k.
IdentitySides collapsed_x(const Config& cfg, int k, const std::vector<int>& i3s, const Poly& v1);
IdentitySides collapsed_y(const Config& cfg, int k, const std::vector<int>& i1s, const Poly& v1);
struct SweepResult {
    std::size_t checked = 0, failed = 0;
    std::vector<std::string> failures;  // first few, rendered
};
// All four identities for every index choice with k <= kmax and every v0
// monomial of degree <= v0_degree from the two admissible subrings.
SweepResult identity_sweep(const Config& cfg, int kmax, int v0_degree);

// True iff v0 lies in F[X_J1, X_{J2\c}, Y_J3] or F[X_J1, Y_{J2\c}, Y_J3].
bool admissible_v0(const Config& cfg, const Poly& v0);

}  // namespace filtration
