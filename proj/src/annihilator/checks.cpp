#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "annihilator/annihilator.hpp"

namespace annihilator {

namespace {

std::vector<std::vector<int>> subsets(std::vector<int> s, int t) {
    std::sort(s.begin(), s.end());
    std::vector<std::vector<int>> out;
    if (t < 0 || t > static_cast<int>(s.size())) return out;
    std::vector<int> pick(s.size(), 0);
    std::fill(pick.begin(), pick.begin() + t, 1);
    do {
        std::vector<int> cur;
        for (std::size_t k = 0; k < s.size(); ++k)
            if (pick[k]) cur.push_back(s[k]);
        out.push_back(cur);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

int perm_sign(const std::vector<std::size_t>& p) {
    int inv = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b) inv += p[a] > p[b];
    return inv % 2 ? -1 : 1;
}

std::vector<int> join(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

std::vector<DeltaOp> minors(const std::vector<int>& rows, const std::vector<int>& cols, int t) {
    std::vector<DeltaOp> out;
    for (const auto& r : subsets(rows, t))
        for (const auto& c : subsets(cols, t)) out.push_back({r, c});
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

Check make_check(std::string name, bool pass, std::string detail = "") {
    return {std::move(name), pass, std::move(detail)};
}

std::string dims(std::size_t a, std::size_t b) { return "computed " + std::to_string(a) + ", predicted " + std::to_string(b); }

// Two-sided comparison of a computed kernel with a predicted span.
Check compare_spans(const std::string& name, const Space& s, const std::vector<SymElement>& computed,
                    const exactpoly::EchelonBasis& predicted, bool stabilized) {
    auto c = span_of(s, computed);
    bool ok = c.subspace_of(predicted) && predicted.subspace_of(c);
    return make_check(name, ok, dims(c.dim(), predicted.dim()) + (stabilized ? ", stabilized" : ", not stabilized"));
}

}  // namespace

OpSum DeltaOp::word_form() const {
    if (rows.size() != cols.size()) throw std::invalid_argument("delta needs as many rows as columns");
    std::vector<std::size_t> p(rows.size());
    std::iota(p.begin(), p.end(), 0);
    OpSum out;
    do {
        Word w{Q(perm_sign(p)), {}};
        for (std::size_t a = 0; a < rows.size(); ++a) w.factors.push_back(Generator::root(rows[a], cols[p[a]]));
        out.push_back(std::move(w));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

SymElement DeltaOp::sym(const Config& cfg, bool projected) const {
    Space s = sym_space(cfg.n);
    exactpoly::PolyBuilder acc(s);
    for (const auto& w : word_form()) {
        SymElement term = Poly::constant(s, w.coef);
        for (const auto& g : w.factors) {
            auto sy = root_symbol(cfg.n, g.i, g.j);
            if (!sy) {
                if (!projected) throw std::invalid_argument("diagonal entry in " + str());
                term = Poly(s);
                break;
            }
            term = term * *sy;
        }
        acc.add(term);
    }
    SymElement e = acc.finish();
    return projected ? project_L(cfg, e) : e;
}

std::string DeltaOp::str() const { return "Delta^{" + join_ints(rows) + "}_{" + join_ints(cols) + "}"; }

std::vector<DeltaOp> delta_ops(const Config& cfg, DeltaFamily family) {
    switch (family) {
        case DeltaFamily::MinorL1: return minors(cfg.J2(), cfg.J1(), 2);
        case DeltaFamily::MinorL2: return minors(cfg.J3(), cfg.J2(), 2);
        case DeltaFamily::Minor3: return minors(join(cfg.J2(), cfg.J3()), join(cfg.J1(), cfg.J2()), 3);
    }
    return {};
}

I1Report verify_I1(const Tower& t, int kmax) {
    I1Report r;
    r.piece = compute_I1(t, kmax);
    const int n = t.cfg.n;
    Space s = sym_space(n);
    auto computed = span_of(s, r.piece.basis);
    exactpoly::EchelonBasis expected(s);
    for (const auto& g : oscrep::all_generators(n)) {
        SymElement e = symbol(n, g);
        bool cartan = g.kind == Generator::Cartan;
        if (cartan || !in_L(t.cfg, g.i, g.j)) {
            expected.insert(e);
            if (!cartan) ++r.expected_roots;
        }
        if (computed.contains(e)) ++(cartan ? r.cartan_dim : r.root_dim);
    }
    r.exact = computed.subspace_of(expected) && expected.subspace_of(computed);
    return r;
}

namespace {

struct Families {
    bool l1_family = false, l2_family = false;     // Delta^2 families in I_(2)
    int l1_power = 0, l2_power = 0;                 // exponent placing the family in a higher piece
};

Families families_for(const Config& cfg) {
    Families f;
    if (cfg.l1 <= 0 && cfg.l2 <= 0) {
        f.l1_family = f.l2_family = true;
    } else if (cfg.l1 <= 0) {
        f.l2_family = true;
        f.l1_power = cfg.l2 + 1;
    } else if (cfg.l2 <= 0) {
        f.l1_family = true;
        f.l2_power = cfg.l1 + 1;
    }
    return f;
}

std::vector<SymElement> predicted_I2(const Config& cfg, const Families& f) {
    std::vector<SymElement> out;
    if (f.l1_family)
        for (const auto& d : delta_ops(cfg, DeltaFamily::MinorL1)) out.push_back(d.sym(cfg, true));
    if (f.l2_family)
        for (const auto& d : delta_ops(cfg, DeltaFamily::MinorL2)) out.push_back(d.sym(cfg, true));
    return out;
}

void power_checks(const Tower& t, const std::vector<DeltaOp>& ops, int e, int kmax, const std::string& label,
                  std::vector<Check>& out) {
    if (e <= 0) return;
    const int p = 2 * e;
    const int levels = std::min(kmax, t.depth() - (p - 1));
    if (ops.empty()) {
        out.push_back(make_check(label + " power " + std::to_string(e), true, "vacuous: no such Delta"));
        return;
    }
    for (const auto& d : ops) {
        SymElement pw = d.sym(t.cfg, false).pow(e);
        bool ok = levels >= 0 && maps_into(t, words_of(t.cfg.n, pw), levels, p - 1);
        out.push_back(make_check("(" + d.str() + ")^" + std::to_string(e) + " in I_(" + std::to_string(p) + ")", ok,
                                 "levels <= " + std::to_string(levels)));
    }
}

}  // namespace

bool I2Report::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

I2Report verify_I2(const Config& cfg, int kmax) {
    if (filtration::regime(cfg) != filtration::Regime::SignedTN)
        throw std::invalid_argument("I_(2) description needs n1 < n2 with l1 <= 0 or l2 <= 0");
    Families f = families_for(cfg);
    const int depth = std::max(kmax, 2 * std::max(f.l1_power, f.l2_power));
    Tower t = filtration::bruteforce_tower(cfg, depth);
    I2Report r;

    auto i1 = verify_I1(t, kmax);
    r.checks.push_back(make_check("I_(1) = Cartan + off-L roots", i1.exact,
                                  std::to_string(i1.cartan_dim) + " Cartan, " + std::to_string(i1.root_dim) + " roots"));

    auto member = [&](DeltaFamily fam, const std::string& label) {
        for (const auto& d : delta_ops(cfg, fam))
            r.checks.push_back(make_check(label + " " + d.str() + " in I_(2)",
                                          maps_into(t, d.word_form(), kmax - 1, 1)));
    };
    if (f.l1_family) member(DeltaFamily::MinorL1, "L1");
    if (f.l2_family) member(DeltaFamily::MinorL2, "L2");

    auto piece = compute_Ip_L(t, 2, kmax);
    Space s = sym_space(cfg.n);
    r.checks.push_back(compare_spans("I_(2) mod <I_(1)>", s, piece.basis, span_of(s, predicted_I2(cfg, f)),
                                     piece.stabilized));

    power_checks(t, delta_ops(cfg, DeltaFamily::MinorL1), f.l1_power, kmax, "L1", r.checks);
    power_checks(t, delta_ops(cfg, DeltaFamily::MinorL2), f.l2_power, kmax, "L2", r.checks);
    return r;
}

namespace {

// Case number of a sorted 3x3 Delta with rows in J2 u J3 and columns in J1 u J2.
int alternation_case(const Config& cfg, const DeltaOp& d) {
    auto b = [&](int i) { return cfg.block(i); };
    const auto& j = d.rows;
    const auto& i = d.cols;
    if (!(b(j[0]) == 2 && b(i[2]) == 2)) return 1;
    bool all_i2 = b(i[0]) == 2, all_j2 = b(j[2]) == 2;
    if (all_i2 || all_j2) return 6;
    if (b(j[1]) == 3 && b(i[1]) == 1) return 2;
    if (b(j[1]) == 2 && b(j[2]) == 3 && b(i[1]) == 1) return 3;
    if (b(j[1]) == 3 && b(i[0]) == 1 && b(i[1]) == 2) return 4;
    return 5;
}

}  // namespace

Check alternation_zero_identity(const Config& cfg, int zero_degree) {
    std::vector<DeltaOp> ops;
    for (const auto& d : delta_ops(cfg, DeltaFamily::Minor3))
        if (alternation_case(cfg, d) == 1) ops.push_back(d);
    Space xy = cfg.space();
    std::size_t monos = 0;
    bool ok = true;
    std::string bad;
    for (const auto& d : ops) {
        auto w = d.word_form();
        for (int deg = 0; deg <= zero_degree && ok; ++deg)
            for (const auto& m : exactpoly::monomials_of_degree(xy->nvars(), deg)) {
                ++monos;
                if (!apply(cfg, w, Poly::monomial(xy, m)).is_zero()) {
                    ok = false;
                    bad = d.str() + " on " + exactpoly::mono_str(*xy, m);
                    break;
                }
            }
    }
    std::string detail = std::to_string(ops.size()) + " operators, " + std::to_string(monos) + " evaluations";
    if (ops.empty()) detail = "vacuous: no case (1) triple";
    if (!ok) detail += ", nonzero: " + bad;
    return make_check("case (1) zero operator on " + cfg.str(), ok, detail);
}

std::vector<Check> alternation_cases(const Config& cfg, int kmax) {
    Tower t = filtration::bruteforce_tower(cfg, kmax + 2);
    std::vector<Check> out;
    std::vector<bool> seen(7, false);
    for (const auto& d : delta_ops(cfg, DeltaFamily::Minor3)) {
        int c = alternation_case(cfg, d);
        if (c == 1 || seen[static_cast<std::size_t>(c)]) continue;
        seen[static_cast<std::size_t>(c)] = true;
        bool ok = maps_into(t, d.word_form(), kmax, 2);
        std::string detail = "levels <= " + std::to_string(kmax);
        if (c >= 5) {
            bool in_i1 = d.sym(cfg, true).is_zero();
            ok = ok && in_i1;
            detail += in_i1 ? ", lies in <I_(1)>" : ", not in <I_(1)>";
        }
        out.push_back(make_check("case (" + std::to_string(c) + ") " + d.str() + " on " + cfg.str(), ok, detail));
    }
    return out;
}

Check I3_exactness(const Config& cfg, int kmax) {
    Tower t = filtration::bruteforce_tower(cfg, kmax - 1);
    auto piece = compute_Ip_L(t, 3, kmax);
    Families f = families_for(cfg);
    auto L = L_symbols(cfg);
    auto pred = ideal_degree(predicted_I2(cfg, f), L, 3);
    for (const auto& d : delta_ops(cfg, DeltaFamily::Minor3)) pred.insert(d.sym(cfg, true));
    return compare_spans("I_(3) mod <I_(1), I_(2)> on " + cfg.str(), sym_space(cfg.n), piece.basis, pred,
                         piece.stabilized);
}

bool I3Report::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

I3Report verify_I3(const Config& cfg, int kmax, int zero_degree) {
    I3Report r;
    r.checks.push_back(alternation_zero_identity(cfg, zero_degree));
    for (auto& c : alternation_cases(cfg, kmax)) r.checks.push_back(std::move(c));
    return r;
}

bool MainTheoremReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

MainTheoremReport verify_main_theorem(const Config& cfg, int kmax) {
    using filtration::Regime;
    Regime reg = filtration::regime(cfg);
    if (reg == Regime::Unsupported) throw std::invalid_argument("no variety description for " + cfg.str());
    MainTheoremReport r;

    // generators at ideal level, plus those only reached through a power
    std::vector<std::pair<DeltaOp, int>> gens;
    if (reg == Regime::SignedTN) {
        r.branch = "n1<n2, l1<=0 or l2<=0: V(I3(J2+J3,J1+J2) + I2(J2,J1) + I2(J3,J2) + I1(J2,J2))";
        Families f = families_for(cfg);
        for (const auto& d : delta_ops(cfg, DeltaFamily::MinorL1)) gens.emplace_back(d, f.l1_family ? 1 : f.l1_power);
        for (const auto& d : delta_ops(cfg, DeltaFamily::MinorL2)) gens.emplace_back(d, f.l2_family ? 1 : f.l2_power);
        for (const auto& d : delta_ops(cfg, DeltaFamily::Minor3)) gens.emplace_back(d, 1);
    } else if (reg == Regime::PositiveFull) {
        r.branch = "n1<n2=n, l1,l2>0: V(I2(J2,J1))";
        for (const auto& d : delta_ops(cfg, DeltaFamily::MinorL1)) gens.emplace_back(d, 1);
    } else {
        r.branch = "n1=n2: V(I3(J3,J1))";
        for (const auto& d : minors(cfg.J3(), cfg.J1(), 3)) gens.emplace_back(d, 1);
    }
    int depth = kmax;
    for (const auto& [d, e] : gens) depth = std::max(depth, static_cast<int>(d.rows.size()) * e);
    Tower t = filtration::bruteforce_tower(cfg, depth);

    auto i1 = verify_I1(t, kmax);
    r.checks.push_back(make_check("I_(1) = Cartan + off-L roots", i1.exact,
                                  std::to_string(i1.cartan_dim) + " Cartan, " + std::to_string(i1.root_dim) + " roots"));

    std::size_t checked = 0, zero = 0;
    bool all = true;
    std::string bad;
    for (const auto& [d, e] : gens) {
        SymElement g = d.sym(cfg, true);
        if (g.is_zero()) {
            ++zero;
            continue;
        }
        const int p = static_cast<int>(d.rows.size()) * e;
        ++checked;
        if (!maps_into(t, words_of(cfg.n, g.pow(e)), std::min(kmax, depth - (p - 1)), p - 1)) {
            all = false;
            if (bad.empty()) bad = ", fails: " + d.str() + (e > 1 ? "^" + std::to_string(e) : "");
        }
    }
    r.checks.push_back(make_check("generators annihilate", all,
                                  std::to_string(checked) + " generators, " + std::to_string(zero) +
                                      " vanish mod <I_(1)>" + bad));

    std::vector<SymElement> ideal_gens;
    for (const auto& [d, e] : gens)
        if (e == 1) ideal_gens.push_back(d.sym(cfg, true));
    auto L = L_symbols(cfg);
    Space s = sym_space(cfg.n);
    for (int p = 2; p <= 3; ++p) {
        auto piece = compute_Ip_L(t, p, kmax);
        r.checks.push_back(compare_spans("I_(" + std::to_string(p) + ") mod <I_(1)> in degree " + std::to_string(p), s,
                                         piece.basis, ideal_degree(ideal_gens, L, p), piece.stabilized));
    }
    return r;
}

}  // namespace annihilator
