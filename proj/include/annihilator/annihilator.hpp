#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filtration/filtration.hpp"

namespace annihilator {

using exactpoly::Mono;
using exactpoly::Poly;
using exactpoly::Q;
using exactpoly::Z;
using exactpoly::Space;
using filtration::Tower;
using oscrep::Config;
using oscrep::Generator;

// Polynomial in the n^2-1 commuting generator symbols.
using SymElement = Poly;

Space sym_space(int n);
SymElement symbol(int n, const Generator& g);
// E_{j,i} as a symbol; diagonal entries have no symbol and give nullopt.
std::optional<SymElement> root_symbol(int n, int j, int i);

// Ordered operator word, leftmost factor first; a Root generator with i == j
// stands for the gl(n) diagonal element E_{i,i}.
struct Word {
    Q coef;
    std::vector<Generator> factors;
};
using OpSum = std::vector<Word>;

// Each monomial as a word with factors in descending generator order.
OpSum words_of(int n, const SymElement& e);
// Same, with an arbitrary permutation of each monomial's factors picked by rank.
OpSum words_of_permuted(int n, const SymElement& e, unsigned rank);
Poly apply_word(const Config& cfg, const std::vector<Generator>& factors, const Poly& v);
Poly apply(const Config& cfg, const OpSum& op, const Poly& v);
Poly apply(const Config& cfg, const SymElement& e, const Poly& v);

// (j, i) with block(j) > block(i): the pairs whose operators raise the filtration.
std::vector<std::pair<int, int>> L_pairs(const Config& cfg);
bool in_L(const Config& cfg, int j, int i);
std::vector<SymElement> L_symbols(const Config& cfg);
// Sets every symbol outside L (Cartan included) to zero.
SymElement project_L(const Config& cfg, const SymElement& e);

// Residues of e(v) modulo M_{k+p-1} for the rows added at level k.
std::vector<Poly> act(const Tower& t, const SymElement& e, int k);
// Whether op(M_k) lies in M_{k+shift} for every k <= kmax, checking each level's new rows.
bool maps_into(const Tower& t, const OpSum& op, int kmax, int shift);

struct AnnihilatorPiece {
    int p = 0;
    int kmax_checked = 0;                 // highest acted level
    bool stabilized = false;              // unchanged between kmax_checked-1 and kmax_checked
    std::size_t unknowns = 0;
    std::vector<SymElement> basis;        // echelonized kernel
    std::size_t previous_dim = 0;
};

// Kernel of {eta in Span(domain) : eta(M_k) in M_{k+p-1} for k <= kmax - p}. The
// domain must consist of degree-p monomials; default is all degree-p monomials
// in the given symbols.
AnnihilatorPiece compute_Ip(const Tower& t, int p, int kmax, const std::vector<SymElement>& symbols);
AnnihilatorPiece compute_I1(const Tower& t, int kmax);
AnnihilatorPiece compute_Ip_L(const Tower& t, int p, int kmax);  // restricted to S^p(L)

std::vector<SymElement> monomials_in(const std::vector<SymElement>& symbols, int p);
exactpoly::EchelonBasis span_of(const Space& s, const std::vector<SymElement>& v);
// Degree-d part of the ideal generated by gens inside S(span of symbols).
exactpoly::EchelonBasis ideal_degree(const std::vector<SymElement>& gens, const std::vector<SymElement>& symbols,
                                     int d);

struct DeltaOp {
    std::vector<int> rows, cols;  // j's and i's, same length t

    // sum over permutations s of sign(s) E_{j1,i_s(1)} ... E_{jt,i_s(t)}
    OpSum word_form() const;
    // Symbol form; throws if a diagonal entry occurs unless projecting to S(L).
    SymElement sym(const Config& cfg, bool projected) const;
    std::string str() const;
};

enum class DeltaFamily { MinorL1, MinorL2, Minor3 };
std::vector<DeltaOp> delta_ops(const Config& cfg, DeltaFamily family);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct I1Report {
    AnnihilatorPiece piece;
    std::size_t cartan_dim = 0, root_dim = 0, expected_roots = 0;
    bool exact = false;  // kernel equals Cartan plus off-L roots, two-sided
};
I1Report verify_I1(const Tower& t, int kmax);

struct I2Report {
    std::vector<Check> checks;
    bool pass() const;
};
// Delta membership and I_(2) exactness mod <I_(1)>; power claims checked with
// acted levels up to kmax.
I2Report verify_I2(const Config& cfg, int kmax);

struct I3Report {
    std::vector<Check> checks;
    bool pass() const;
};
// Case (1) zero-operator identity on monomials of degree <= zero_degree.
Check alternation_zero_identity(const Config& cfg, int zero_degree);
// Residue membership for a representative of cases (2) through (6).
std::vector<Check> alternation_cases(const Config& cfg, int kmax);
Check I3_exactness(const Config& cfg, int kmax);
I3Report verify_I3(const Config& cfg, int kmax, int zero_degree);

struct MainTheoremReport {
    std::string branch;
    std::vector<Check> checks;
    bool pass() const;
};
MainTheoremReport verify_main_theorem(const Config& cfg, int kmax);

// Expected dimension of the associated variety by case.
int gk_expected(const Config& cfg);
struct GKEstimate {
    int d = -1;
    bool confident = false;
    int trailing_zeros = 0;
};
// Least d such that the d-th difference of the Hilbert sequence (the (d+1)-st
// of the dimensions) ends in zeros; needs at least 7 dimensions.
GKEstimate gkdim_estimate(const std::vector<std::size_t>& dims);

}  // namespace annihilator
