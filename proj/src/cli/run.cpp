#include <algorithm>
#include <chrono>
#include <random>

#include "annihilator/annihilator.hpp"
#include "cli/cli.hpp"
#include "detvar/detvar.hpp"

namespace cli {

using nlohmann::json;
using oscrep::Config;

const std::vector<std::string>& commands() {
    static const std::vector<std::string> c = {"basis",         "project",   "filtration",          "verify-filtration",
                                               "kernel-phi",    "chain3",    "independence",        "annihilator",
                                               "verify-main-theorem", "gkdim", "classify",          "suite"};
    return c;
}

void validate(const RunSpec& s) {
    if (std::find(commands().begin(), commands().end(), s.command) == commands().end())
        throw UsageError("unknown command '" + s.command + "'");
    try {
        s.cfg.validate();
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid configuration: ") + e.what());
    }
    if (s.kmax < 0) throw UsageError("--kmax must be nonnegative");
    if (s.max_degree < 0) throw UsageError("--max-degree must be nonnegative");
    if (s.budget_seconds < 0) throw UsageError("--budget-seconds must be nonnegative");
    if (s.command == "gkdim" && s.kmax < 6) throw UsageError("gkdim needs --kmax >= 6");
    if (s.out == Format::Csv && s.command != "filtration" && s.command != "gkdim")
        throw UsageError("csv output is only available for filtration and gkdim");
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs body into a record, turning module precondition failures into skips.
template <class F>
CheckRecord timed(const std::string& name, const std::string& anchor, F&& body) {
    CheckRecord r;
    r.name = name;
    r.anchor = anchor;
    auto t0 = Clock::now();
    try {
        body(r);
    } catch (const std::invalid_argument& e) {
        r.status = Status::Skipped;
        r.reason = e.what();
        r.payload = json::object();
    } catch (const std::out_of_range& e) {
        r.status = Status::Skipped;
        r.reason = e.what();
        r.payload = json::object();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
}

Status from_bool(bool ok) { return ok ? Status::Pass : Status::Fail; }

json strings(const std::vector<exactpoly::Poly>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(p.str());
    return a;
}

void require_sym_size(const Config& c) {
    if (c.n * c.n - 1 > static_cast<int>(exactpoly::kMaxVars))
        throw std::invalid_argument("n too large for the symbol ring");
}

void cmd_classify(const RunSpec& s, Report& rep) {
    rep.checks.push_back(timed("classification", "irreducibility criterion for harmonic modules", [&](CheckRecord& r) {
        r.payload["irreducible"] = oscrep::classify_irreducible(s.cfg);
        r.payload["regime"] = filtration::regime_name(filtration::regime(s.cfg));
        r.payload["gk_expected"] = annihilator::gk_expected(s.cfg);
    }));
}

void cmd_basis(const RunSpec& s, Report& rep) {
    rep.checks.push_back(timed("M0 basis", "generating subspace M_0", [&](CheckRecord& r) {
        auto rows = filtration::build_M0(s.cfg).rows();
        r.payload["dim"] = rows.size();
        r.payload["basis"] = strings(rows);
        r.status = from_bool(!rows.empty());
    }));
}

void cmd_project(const RunSpec& s, Report& rep) {
    rep.checks.push_back(timed("harmonic projection", "T maps constrained monomials to harmonic elements",
                               [&](CheckRecord& r) {
                                   if (s.cfg.n1 >= s.cfg.n2) throw std::invalid_argument("projection needs n1 < n2");
                                   std::size_t count = 0, bad = 0;
                                   json levels = json::array();
                                   for (int k = 0; k <= s.max_degree; ++k) {
                                       auto monos = oscrep::enumerate_TN_level(s.cfg, k);
                                       for (const auto& m : monos) {
                                           ++count;
                                           auto t = oscrep::project_T(s.cfg, m);
                                           if (!oscrep::laplace(s.cfg, t).is_zero() || oscrep::dfun(s.cfg, t) != k) ++bad;
                                       }
                                       levels.push_back(monos.size());
                                   }
                                   r.payload["monomials_per_level"] = levels;
                                   r.payload["checked"] = count;
                                   r.payload["failed"] = bad;
                                   r.status = from_bool(bad == 0);
                               }));
}

void fill_dims(const filtration::Tower& t, Report& rep, CheckRecord& r) {
    rep.dims = t.dims;
    rep.tabular = true;
    r.payload["dims"] = t.dims;
    r.payload["hilbert"] = filtration::hilbert_sequence(t);
}

void cmd_filtration(const RunSpec& s, Report& rep, const ProgressSink& progress) {
    rep.tabular = true;
    rep.checks.push_back(timed("filtration tower", "filtration M_k generated from M_0", [&](CheckRecord& r) {
        auto t = filtration::bruteforce_tower(s.cfg, s.kmax, [&](int k, std::size_t d) {
            if (progress) progress("level " + std::to_string(k) + ": dim " + std::to_string(d));
        });
        fill_dims(t, rep, r);
    }));
}

void cmd_verify_filtration(const RunSpec& s, Report& rep) {
    std::vector<filtration::LevelComparison> levels;
    std::string method;
    auto head = timed("explicit method", "brute-force and explicit filtrations agree", [&](CheckRecord& r) {
        method = filtration::method_name(filtration::explicit_method(s.cfg));
        levels = filtration::verify_tower_agreement(s.cfg, s.kmax);
        r.payload["method"] = method;
    });
    if (head.status == Status::Skipped) {
        rep.checks.push_back(std::move(head));
        return;
    }
    for (const auto& lv : levels) {
        CheckRecord r;
        r.name = "level " + std::to_string(lv.k);
        r.anchor = "brute-force and explicit filtrations agree";
        r.payload = {{"dim_bruteforce", lv.dim_bruteforce}, {"dim_explicit", lv.dim_explicit}, {"method", method}};
        r.status = from_bool(lv.pass());
        rep.checks.push_back(std::move(r));
    }
}

void kernel_records(const std::vector<detvar::KernelComparison>& cs, const std::string& anchor, Report& rep) {
    for (const auto& c : cs) {
        CheckRecord r;
        r.name = "ker " + c.map + " degree " + std::to_string(c.degree);
        r.anchor = anchor;
        r.payload = {{"kernel_dim", c.kernel_dim}, {"ideal_dim", c.ideal_dim}};
        r.status = from_bool(c.pass());
        rep.checks.push_back(std::move(r));
    }
}

void cmd_kernel_phi(const RunSpec& s, Report& rep) {
    auto J1 = s.cfg.J1(), J3 = s.cfg.J3();
    if (J3.empty()) {
        rep.checks.push_back({"kernel of phi", "determinantal kernels", Status::Skipped, json::object(), "J3 is empty", 0});
        return;
    }
    kernel_records(detvar::verify_phi_xy_kernel(s.cfg.n, J1, J3, s.max_degree), "kernel of phi_x and phi_y is the 2-minor ideal", rep);
    kernel_records(detvar::verify_phi_kernel(s.cfg.n, J1, J3, std::min(s.max_degree, 3)),
                   "kernel of phi is the 3-minor ideal of the bordered matrix", rep);
}

void cmd_chain3(const RunSpec& s, Report& rep) {
    rep.checks.push_back(timed("3-chain detection", "3-chains in index multisets", [&](CheckRecord& r) {
        std::mt19937_64 rng(s.seed);
        std::uniform_int_distribution<int> len(0, 3 * s.max_degree), coord(1, s.cfg.n);
        std::size_t found = 0, mismatches = 0;
        const int trials = 1000;
        for (int it = 0; it < trials; ++it) {
            std::vector<std::pair<int, int>> p(static_cast<std::size_t>(len(rng)));
            for (auto& q : p) q = {coord(rng), coord(rng)};
            bool a = detvar::has_3chain(p);
            found += a;
            mismatches += a != detvar::has_3chain_bruteforce(p);
        }
        r.payload = {{"trials", trials}, {"with_chain", found}, {"mismatches", mismatches}};
        r.status = from_bool(mismatches == 0);
    }));
}

void cmd_independence(const RunSpec& s, Report& rep) {
    rep.checks.push_back(timed("G-set independence", "phi images of 3-chain-free monomials are independent",
                               [&](CheckRecord& r) {
                                   if (s.cfg.J3().empty()) throw std::invalid_argument("J3 is empty");
                                   auto cs = detvar::verify_gset_rank(s.cfg.n, s.cfg.J1(), s.cfg.J3(), s.max_degree);
                                   std::size_t bad = 0, total = 0;
                                   for (const auto& c : cs) {
                                       bad += !c.pass();
                                       total += c.size;
                                   }
                                   r.payload = {{"tuples", cs.size()}, {"monomials", total}, {"failures", bad}};
                                   r.status = from_bool(bad == 0);
                               }));
}

json check_json(const annihilator::Check& c) {
    return {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

void cmd_annihilator(const RunSpec& s, Report& rep) {
    filtration::Tower t(s.cfg);
    bool have = false;
    auto tower = [&]() -> const filtration::Tower& {
        if (!have) {
            require_sym_size(s.cfg);
            if (filtration::regime(s.cfg) == filtration::Regime::Unsupported)
                throw std::invalid_argument("unsupported regime " + s.cfg.str());
            t = filtration::bruteforce_tower(s.cfg, std::max(s.kmax - 1, 0));
            have = true;
        }
        return t;
    };
    rep.checks.push_back(timed("I_(1)", "degree-one annihilator is Cartan plus off-L roots", [&](CheckRecord& r) {
        if (s.kmax < 1) throw std::invalid_argument("needs --kmax >= 1");
        auto i1 = annihilator::verify_I1(tower(), s.kmax);
        r.payload = {{"dim", i1.piece.basis.size()},    {"cartan", i1.cartan_dim},
                     {"roots", i1.root_dim},            {"expected_roots", i1.expected_roots},
                     {"stabilized", i1.piece.stabilized}, {"basis", strings(i1.piece.basis)}};
        r.status = from_bool(i1.exact && i1.piece.stabilized);
        if (!i1.piece.stabilized) r.reason = "kernel still shrinking at the last level";
    }));
    for (int p = 2; p <= 3; ++p)
        rep.checks.push_back(timed("I_(" + std::to_string(p) + ") on S(L)", "annihilator piece restricted to L symbols",
                                   [&](CheckRecord& r) {
                                       if (s.kmax < p) throw std::invalid_argument("needs --kmax >= " + std::to_string(p));
                                       auto piece = annihilator::compute_Ip_L(tower(), p, s.kmax);
                                       r.payload = {{"dim", piece.basis.size()},
                                                    {"unknowns", piece.unknowns},
                                                    {"acted_levels", piece.kmax_checked},
                                                    {"stabilized", piece.stabilized},
                                                    {"basis", strings(piece.basis)}};
                                       r.status = from_bool(piece.stabilized);
                                       if (!piece.stabilized) r.reason = "kernel still shrinking at the last level";
                                   }));
}

void cmd_main_theorem(const RunSpec& s, Report& rep) {
    rep.checks.push_back(timed("associated variety", "annihilator matches the determinantal description",
                               [&](CheckRecord& r) {
                                   require_sym_size(s.cfg);
                                   if (s.kmax < 3) throw std::invalid_argument("needs --kmax >= 3");
                                   auto m = annihilator::verify_main_theorem(s.cfg, s.kmax);
                                   json checks = json::array();
                                   for (const auto& c : m.checks) checks.push_back(check_json(c));
                                   r.payload = {{"branch", m.branch}, {"checks", checks}};
                                   r.status = from_bool(m.pass());
                               }));
}

void cmd_gkdim(const RunSpec& s, Report& rep, const ProgressSink& progress) {
    rep.tabular = true;
    rep.checks.push_back(timed("GK dimension", "growth of dim M_k matches the variety dimension", [&](CheckRecord& r) {
        auto t = filtration::bruteforce_tower(s.cfg, s.kmax, [&](int k, std::size_t d) {
            if (progress) progress("level " + std::to_string(k) + ": dim " + std::to_string(d));
        });
        fill_dims(t, rep, r);
        auto g = annihilator::gkdim_estimate(t.dims);
        int expected = annihilator::gk_expected(s.cfg);
        r.payload["estimate"] = g.d;
        r.payload["confident"] = g.confident;
        r.payload["trailing_zeros"] = g.trailing_zeros;
        r.payload["expected"] = expected;
        r.status = from_bool(g.d == expected && g.confident);
    }));
}

}  // namespace

Report run(const RunSpec& spec, const ProgressSink& progress) {
    validate(spec);
    Report rep;
    rep.spec = spec;
    const auto& c = spec.command;
    if (c == "classify") cmd_classify(spec, rep);
    else if (c == "basis") cmd_basis(spec, rep);
    else if (c == "project") cmd_project(spec, rep);
    else if (c == "filtration") cmd_filtration(spec, rep, progress);
    else if (c == "verify-filtration") cmd_verify_filtration(spec, rep);
    else if (c == "kernel-phi") cmd_kernel_phi(spec, rep);
    else if (c == "chain3") cmd_chain3(spec, rep);
    else if (c == "independence") cmd_independence(spec, rep);
    else if (c == "annihilator") cmd_annihilator(spec, rep);
    else if (c == "verify-main-theorem") cmd_main_theorem(spec, rep);
    else if (c == "gkdim") cmd_gkdim(spec, rep, progress);
    else if (c == "suite") rep.checks = acceptance_suite(spec.budget_seconds, progress);
    return rep;
}

}  // namespace cli
