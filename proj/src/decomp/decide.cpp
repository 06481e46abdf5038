#include "motivix/decomp/decide.hpp"

#include "motivix/corr/corr2.hpp"

#include <cstdlib>
#include <thread>

namespace motivix::decomp {

using cmlat::CellSet;
using cmlat::Mode;
using cmlat::Subset;
using exact::make_rat;
using exact::QuadInt;

int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MOTIVIX_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Indecomposable: return "INDECOMPOSABLE";
        case Status::SurvivingCandidate: return "SURVIVING_CANDIDATE";
        default: return "UNDECIDED";
    }
}

const char* mode_name(DecideMode m) { return m == DecideMode::Exhaustive ? "EXHAUSTIVE" : "PROOFTRACE"; }

std::vector<Probe> probes_for(const AbelianModel& m) {
    const int g = m.g();
    std::vector<Permutation> perms{cmlat::identity_perm(g)};
    for (int a = 0; a < g; ++a)
        for (int b = a + 1; b < g; ++b) perms.push_back(cmlat::transposition(g, a, b));
    std::vector<Probe> out;
    for (std::size_t k = 0; k < perms.size(); ++k) {
        Probe p;
        p.id = static_cast<int>(k);
        p.sigma = perms[k];
        p.endo = cmlat::perm_endo(m, p.sigma);
        p.name = cmlat::perm_str(p.sigma);
        if (m.mode() == Mode::Lattice) p.usable = m.is_integral(p.endo) && m.is_integral(cmlat::rosati(p.endo, m));
        out.push_back(std::move(p));
    }
    return out;
}

Rat cell_coefficient(const Candidate& c, int i, int j, Side s) {
    Rat v = 0;
    if (c.at(Grid::U, i, j) == s) v -= make_rat(1, 2);
    if (c.at(Grid::V, i, j) == s) v -= make_rat(1, 2);
    if (c.at(Grid::W, i, j) == s) v += 2;
    return v;
}

ProbeImage eval_probe(const Candidate& c, const Probe& p, const AbelianModel& m) {
    c.validate();
    if (c.g != m.g()) throw CandidateError("candidate and model have different g");
    ProbeImage img{m.zero(), m.zero()};
    for (int i = 0; i < m.g(); ++i) {
        const int j = p.sigma[i];
        img.lambda(j, i) = QuadInt(m.d(), cell_coefficient(c, i, j, Side::Lambda));
        img.xi(j, i) = QuadInt(m.d(), cell_coefficient(c, i, j, Side::Xi));
    }
    return img;
}

EndoQ probe_query(const Candidate& c, const Probe& p, const AbelianModel& m, Side s) {
    ProbeImage img = eval_probe(c, p, m);
    return (s == Side::Lambda ? img.lambda : img.xi) * cmlat::rosati(p.endo, m);
}

Decision query_integral(const AbelianModel& m, const EndoQ& q) {
    try {
        return {m.is_integral(q), m.mode() == Mode::Lattice ? "lattice" : "axiomatic"};
    } catch (const UnsupportedQuery&) {
    }
    // 2e_A − e_B is integral iff 2e_A + e_{I∖B} is, and the subsets lemma
    // forces A, B ∈ {∅, I}: the query must be scalar.
    auto floor = m.hypothesis_floor();
    if (!floor || *floor < 4) return {std::nullopt, "unknown"};
    std::optional<Rat> first;
    bool scalar = true;
    for (int r = 0; r < m.g(); ++r)
        for (int c = 0; c < m.g(); ++c) {
            const QuadInt& z = q(r, c);
            if (r != c) {
                if (!z.is_zero()) return {std::nullopt, "unknown"};
                continue;
            }
            if (!z.is_rational()) return {std::nullopt, "unknown"};
            const Rat v = z.re();
            if (v != 2 && v != 1 && v != 0 && v != -1) return {std::nullopt, "unknown"};
            if (!first) first = v;
            if (*first != v) scalar = false;
        }
    return {scalar, "liverpool"};
}

Refutation refute(const Candidate& c, const AbelianModel& m, const std::vector<Probe>& probes) {
    cmlat::require_liverpool_hypothesis(m);
    c.validate();
    Refutation out;
    for (const auto& p : probes) {
        if (!p.usable) continue;
        EndoQ q = probe_query(c, p, m, Side::Lambda);
        Decision d = query_integral(m, q);
        Step s;
        s.probe = p.name;
        s.query = q;
        s.integral = d.integral;
        s.rule = d.rule == "liverpool" ? "liverpool" : (p.id == 0 ? "case1" : "case2");
        s.detail = "Lambda image under " + p.name + " decided by " + d.rule;
        out.steps.push_back(std::move(s));
        if (!d.integral) {
            out.undecided = true;
        } else if (!*d.integral) {
            out.refuted = true;
            out.undecided = false;
            break;
        }
    }
    return out;
}

Refutation refute(const Candidate& c, const AbelianModel& m) { return refute(c, m, probes_for(m)); }

namespace {

// Cell triple: bit 0 = U, bit 1 = V, bit 2 = W; a set bit means Ξ, so
// counting upward is Λ-first.
constexpr int kValues = 6;

int value_index(int t) {
    const int u = !(t & 1), v = !(t & 2), w = !(t & 4);
    switch (4 * w - u - v) {  // twice the Λ coefficient
        case 4: return 0;
        case 3: return 1;
        case 2: return 2;
        case 0: return 3;
        case -1: return 4;
        default: return 5;
    }
}

Rat value_of(int idx) {
    static const int twice[kValues] = {4, 3, 2, 0, -1, -2};
    return make_rat(twice[idx], 2);
}

enum class Tri : std::uint8_t { Pass, Fail, Unknown };

Side side_of(int t, int bit) { return (t >> bit) & 1 ? Side::Xi : Side::Lambda; }

void put_triple(Candidate& c, int i, int j, int t) {
    c.set(Grid::U, i, j, side_of(t, 0));
    c.set(Grid::V, i, j, side_of(t, 1));
    c.set(Grid::W, i, j, side_of(t, 2));
}

struct Exhaustive {
    const AbelianModel& m;
    int g;
    std::vector<Probe> probes;
    std::vector<Tri> table;  // by base-6 code of the diagonal query
    std::vector<std::pair<int, int>> pairs;
    std::vector<bool> pair_usable;

    Exhaustive(const AbelianModel& model, int threads) : m(model), g(model.g()), probes(probes_for(model)) {
        long size = 1;
        for (int i = 0; i < g; ++i) size *= kValues;
        table.assign(size, Tri::Unknown);
        std::vector<std::thread> pool;
        const int n = std::max(1, std::min<int>(threads, size));
        std::vector<std::exception_ptr> errs(n);
        for (int w = 0; w < n; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (long code = w; code < size; code += n) {
                        EndoQ q = m.zero();
                        long rest = code;
                        for (int t = 0; t < g; ++t, rest /= kValues)
                            q(t, t) = QuadInt(m.d(), value_of(static_cast<int>(rest % kValues)));
                        Decision d = query_integral(m, q);
                        table[code] = !d.integral ? Tri::Unknown : *d.integral ? Tri::Pass : Tri::Fail;
                    }
                } catch (...) {
                    errs[w] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
        for (std::size_t k = 1; k < probes.size(); ++k) {
            int a = -1, b = -1;
            for (int i = 0; i < g; ++i)
                if (probes[k].sigma[i] != i) (a < 0 ? a : b) = i;
            pairs.emplace_back(a, b);
            pair_usable.push_back(probes[k].usable);
        }
    }

    static bool accept(Tri t, bool definite) { return definite ? t == Tri::Pass : t != Tri::Fail; }

    long diag_code(const std::vector<int>& diag) const {
        long code = 0, w = 1;
        for (int t = 0; t < g; ++t, w *= kValues) code += value_index(diag[t]) * w;
        return code;
    }

    // Query code for probe (a b) given the triples at (a,b) and (b,a).
    long pair_code(long base, const std::vector<int>& diag, int a, int b, int tab, int tba) const {
        long wa = 1, wb = 1;
        for (int i = 0; i < a; ++i) wa *= kValues;
        for (int i = 0; i < b; ++i) wb *= kValues;
        // position a reads cell (σ(a), a) = (b, a); position b reads (a, b)
        return base + (value_index(tba) - value_index(diag[a])) * wa + (value_index(tab) - value_index(diag[b])) * wb;
    }

    struct PairCounts {
        Int all, lam, xi;  // any, both W cells Λ, both W cells Ξ
    };

    PairCounts pair_counts(long base, const std::vector<int>& diag, std::size_t k, bool definite) const {
        PairCounts pc;
        auto [a, b] = pairs[k];
        for (int tab = 0; tab < 8; ++tab)
            for (int tba = 0; tba < 8; ++tba) {
                if (pair_usable[k] && !accept(table[pair_code(base, diag, a, b, tab, tba)], definite)) continue;
                pc.all += 1;
                if (!(tab & 4) && !(tba & 4)) pc.lam += 1;
                if ((tab & 4) && (tba & 4)) pc.xi += 1;
            }
        return pc;
    }

    // Nontrivial survivors with this diagonal.
    Int count(const std::vector<int>& diag, bool definite) const {
        const long base = diag_code(diag);
        if (!accept(table[base], definite)) return 0;
        bool all_lam = true, all_xi = true;
        for (int t : diag) (t & 4 ? all_lam : all_xi) = false;
        Int all = 1, lam = 1, xi = 1;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            auto pc = pair_counts(base, diag, k, definite);
            all *= pc.all;
            lam *= pc.lam;
            xi *= pc.xi;
        }
        Int out = all;
        if (all_lam) out -= lam;
        if (all_xi) out -= xi;
        return out;
    }

    Candidate witness(const std::vector<int>& diag) const {
        Candidate c = Candidate::uniform(g, Side::Lambda);
        for (int i = 0; i < g; ++i) put_triple(c, i, i, diag[i]);
        const long base = diag_code(diag);
        bool all_lam = true, all_xi = true;
        for (int t : diag) (t & 4 ? all_lam : all_xi) = false;
        // W still needs a cell on the missing side, found in the first pair that allows it.
        bool need = all_lam || all_xi;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            auto [a, b] = pairs[k];
            int pick_ab = -1, pick_ba = -1;
            for (int tab = 0; tab < 8 && pick_ab < 0; ++tab)
                for (int tba = 0; tba < 8; ++tba) {
                    if (pair_usable[k] && table[pair_code(base, diag, a, b, tab, tba)] != Tri::Pass) continue;
                    const bool fills = all_lam ? ((tab & 4) || (tba & 4)) : (!(tab & 4) || !(tba & 4));
                    if (need && !fills) continue;
                    pick_ab = tab;
                    pick_ba = tba;
                    break;
                }
            if (pick_ab < 0) {  // no filling pattern here; take the first passing one
                for (int tab = 0; tab < 8 && pick_ab < 0; ++tab)
                    for (int tba = 0; tba < 8; ++tba)
                        if (!pair_usable[k] || table[pair_code(base, diag, a, b, tab, tba)] == Tri::Pass) {
                            pick_ab = tab;
                            pick_ba = tba;
                            break;
                        }
            } else if (need) {
                need = false;
            }
            put_triple(c, a, b, pick_ab);
            put_triple(c, b, a, pick_ba);
        }
        return c;
    }
};

Step note(const std::string& rule, const std::string& detail, std::optional<bool> integral = std::nullopt,
          const std::string& probe = "-") {
    return Step{probe, std::nullopt, integral, rule, detail};
}

const char* kReduction =
    "candidates are grid-shaped: every cell of the U, V, W grids lies on one side "
    "(trusted reduction from semisimplicity of numerical motives)";

Verdict run_exhaustive(const AbelianModel& m, int threads) {
    const int g = m.g();
    if (g > 4) throw PreconditionError("EXHAUSTIVE mode supports g <= 4");
    Verdict v;
    v.mode = DecideMode::Exhaustive;
    Exhaustive ex(m, threads);
    for (const auto& p : ex.probes) v.probes.push_back(p.name);
    auto floor = m.hypothesis_floor();
    v.steps.push_back(note("hypothesis", floor ? "least proper exponent " + floor->get_str() : "g = 1", true));
    v.steps.push_back(note("reduction", kReduction));

    long passes = 0, fails = 0, unknown = 0;
    for (Tri t : ex.table) (t == Tri::Pass ? passes : t == Tri::Fail ? fails : unknown) += 1;
    for (const auto& p : ex.probes) {
        std::string d = p.usable ? "diagonal query table: " + std::to_string(passes) + " integral, " +
                                       std::to_string(fails) + " not integral, " + std::to_string(unknown) + " undecided"
                                 : "probe not integral in this model; imposes no constraint";
        v.steps.push_back(note(p.id == 0 ? "case1" : "case2", d, std::nullopt, p.name));
    }

    Int n_cells = Int(g) * g;
    Int all8, all4;
    mpz_ui_pow_ui(all8.get_mpz_t(), 8, n_cells.get_ui());
    mpz_ui_pow_ui(all4.get_mpz_t(), 4, n_cells.get_ui());
    v.candidates = (all8 - 2 * all4) / 2;

    Int definite = 0, maybe = 0;
    std::optional<std::vector<int>> first;
    std::vector<int> diag(g, 0);
    long total = 1;
    for (int i = 0; i < g; ++i) total *= 8;
    for (long code = 0; code < total; ++code) {
        long rest = code;
        for (int i = 0; i < g; ++i, rest /= 8) diag[i] = static_cast<int>(rest % 8);
        Int d = ex.count(diag, true);
        if (d > 0 && !first) first = diag;
        definite += d;
        maybe += ex.count(diag, false);
    }
    if (definite % 2 != 0 || maybe % 2 != 0) throw Error("survivor count is not symmetric under swapping sides");
    v.survivors = maybe / 2;
    v.refuted = v.candidates - v.survivors;
    if (maybe == 0) {
        v.status = Status::Indecomposable;
    } else if (definite > 0) {
        v.status = Status::SurvivingCandidate;
        v.witness = ex.witness(*first);
    } else {
        v.status = Status::Undecided;
    }
    v.steps.push_back(note("summary", "refuted " + v.refuted.get_str() + " of " + v.candidates.get_str() +
                                          " nontrivial candidates up to swapping sides; " + v.survivors.get_str() +
                                          " survive",
                           std::nullopt));
    return v;
}

bool verify_tables(const AbelianModel& m, const Probe& p, const corr::GridProjectors& grids) {
    for (int i = 0; i < m.g(); ++i) {
        const int j = p.sigma[i];
        EndoQ hit = m.zero();
        hit(j, i) = QuadInt(m.d(), 1);
        EndoQ two = hit, half = hit;
        two.scale(Rat(2));
        half.scale(make_rat(-1, 2));
        if (!(corr::conv(p.endo, grids.theta[i][j], m) == two)) return false;
        if (!(corr::conv(p.endo, grids.a1[i][j], m) == half)) return false;
        if (!(corr::conv(p.endo, grids.a2[i][j], m) == half)) return false;
    }
    return true;
}

Verdict run_prooftrace(const AbelianModel& m) {
    const int g = m.g();
    Verdict v;
    v.mode = DecideMode::ProofTrace;
    auto probes = probes_for(m);
    for (const auto& p : probes) v.probes.push_back(p.name);
    auto floor = m.hypothesis_floor();
    v.steps.push_back(note("hypothesis", floor ? "least proper exponent " + floor->get_str() + " >= 4" : "g = 1", true));
    v.steps.push_back(note("reduction", kReduction));
    if (g == 1) {
        v.steps.push_back(note("case1", "W has a single cell; no nontrivial candidate exists", false));
        v.status = Status::Indecomposable;
        return v;
    }
    bool ok = true;

    auto grids = corr::build_grids(m);
    for (const auto& p : probes) {
        if (!p.usable) {
            v.steps.push_back(note("table", "probe not integral in this model", false, p.name));
            continue;
        }
        bool good = verify_tables(m, p, grids);
        v.steps.push_back(note("table", "conv values on the cells (i, sigma(i)) are 2 on Theta and -1/2 on A1, A2",
                               good, p.name));
        if (!good) throw Error("convolution table mismatch for probe " + p.name);
    }

    // Norm-endomorphism criterion: e⁰_i / 2 is never integral.
    const auto& n = m.atom_exponents();
    for (int i = 0; i < g; ++i) {
        EndoQ q = m.idempotent(cmlat::singleton(i));
        q.scale(Rat(n[i]) / 2);
        Decision d = query_integral(m, q);
        Step s = note("norm", "(n_" + std::to_string(i + 1) + "/2)*e_" + std::to_string(i + 1) + " decided by " + d.rule,
                      d.integral);
        s.query = q;
        v.steps.push_back(std::move(s));
        if (d.integral != false) ok = false;
    }

    // Subsets lemma.
    const Subset all = cmlat::full_set(g);
    long checked = 0, violations = 0, assumed = 0;
    auto check = [&](Subset a, Subset b) {
        try {
            ++checked;
            if (cmlat::liverpool_check(m, a, b) == cmlat::LiverpoolResult::Violates) ++violations;
        } catch (const UnsupportedQuery&) {
            ++assumed;
        }
    };
    std::string how;
    if (m.mode() == Mode::Lattice && g <= 6) {
        for (Subset a = 0; a <= all; ++a)
            for (Subset b = 0; b <= all; ++b) check(a, b);
        how = "all pairs (A, B)";
    } else {
        std::vector<Subset> blocks{0, all};
        for (int i = 0; i < g; ++i) {
            blocks.push_back(cmlat::singleton(i));
            blocks.push_back(all & ~cmlat::singleton(i));
        }
        for (Subset a : blocks)
            for (Subset b : blocks) check(a, b);
        how = "block patterns (A, B) over empty, I, atoms and their complements";
    }
    v.steps.push_back(note("liverpool",
                           how + ": " + std::to_string(checked) + " checked, " + std::to_string(violations) +
                               " violations, " + std::to_string(assumed) + " taken from the hypothesis",
                           violations == 0 ? std::optional<bool>(false) : std::optional<bool>(true)));
    if (violations) ok = false;

    const bool case1 = ok && probes[0].usable;
    v.steps.push_back(note("case1",
                           case1 ? "diagonal of W split between both sides: integrality of the identity probe forces "
                                   "U = V on the diagonal, and 3*id = (2e_W(L) + e_U(X)) + (2e_W(X) + e_U(L)) "
                                   "contradicts the subsets lemma"
                                 : "Case 1 chain incomplete",
                           case1 ? std::optional<bool>(false) : std::nullopt, probes[0].name));
    if (!case1) ok = false;

    for (std::size_t k = 1; k < probes.size(); ++k) {
        const auto& p = probes[k];
        int a = -1, b = -1;
        for (int i = 0; i < g; ++i)
            if (p.sigma[i] != i) (a < 0 ? a : b) = i;
        std::string cell = "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
        if (!p.usable) {
            v.steps.push_back(note("case2", "pair " + cell + ": probe not integral, case open", std::nullopt, p.name));
            ok = false;
            continue;
        }
        // σ_U^⊤ ∘ σ_J^⊤ = e_{σ,U} on a set holding the diagonal and the pair.
        CellSet u = CellSet::empty(g);
        for (int i = 0; i < g; ++i) u.set(i, i);
        u.set(a, b);
        EndoQ lhs = cmlat::rosati(cmlat::perm_endo(m, cmlat::PermEndoSpec{p.sigma, u}), m) *
                    cmlat::rosati(cmlat::perm_endo(m, cmlat::inverse(p.sigma)), m);
        const bool parfenon = lhs == m.idempotent(cmlat::twisted_set(p.sigma, u));
        const bool fixed = g >= 3;
        if (parfenon && fixed) {
            v.steps.push_back(note("case2",
                                   "pair " + cell +
                                       " on the Xi side of W: the twisted idempotents of both sides are nonzero "
                                       "(a fixed point keeps the diagonal), so the subsets lemma refutes",
                                   false, p.name));
        } else {
            v.steps.push_back(note("case2",
                                   "pair " + cell +
                                       (parfenon ? ": sigma fixes no index, the twisted idempotent of the full "
                                                   "diagonal side can vanish; case open"
                                                 : ": twisted identity failed; case open"),
                                   std::nullopt, p.name));
            ok = false;
        }
    }
    v.status = ok ? Status::Indecomposable : Status::Undecided;
    return v;
}

}  // namespace

Verdict decide(const AbelianModel& m, DecideMode mode, const DecideOptions& opt) {
    cmlat::require_liverpool_hypothesis(m);
    return mode == DecideMode::Exhaustive ? run_exhaustive(m, worker_count(opt.threads)) : run_prooftrace(m);
}

}  // namespace motivix::decomp
