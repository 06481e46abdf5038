// motivix: command-line front end. Text goes to stdout; --json PATH writes
// the report ("-" for stdout). Exit codes: 0 success or INDECOMPOSABLE,
// 2 SURVIVING_CANDIDATE or UNDECIDED, 3 theorem hypothesis unmet, 1 error.

#include <CLI11.hpp>

#include "motivix/corr/corr2.hpp"
#include "motivix/decomp/decide.hpp"
#include "motivix/fermat/instance.hpp"
#include "motivix/io/json.hpp"
#include "motivix/motcalc/motive.hpp"
#include "motivix/version.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace motivix;
using exact::Int;
using exact::Rat;
using io::Json;

namespace {

struct Context {
    std::vector<std::string> echo;
    std::vector<std::string> input_files;
    std::string json_out;
    std::string trace = "steps";
    bool timing = false;
    std::ostringstream text;
    Json results = Json::object();
    int exit_code = 0;
};

std::string read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

io::TraceLevel trace_level(const std::string& s) {
    if (s == "none") return io::TraceLevel::None;
    if (s == "full") return io::TraceLevel::Full;
    return io::TraceLevel::Steps;
}

int exit_for(decomp::Status s) { return s == decomp::Status::Indecomposable ? 0 : 2; }

std::string endo_str(const cmlat::EndoQ& x) {
    std::string out;
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) {
            if (x(r, c).is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + x(r, c).str() + ")*E" + std::to_string(r + 1) + std::to_string(c + 1);
        }
    return out.empty() ? "0" : out;
}

void print_verdict(Context& ctx, const decomp::Verdict& v) {
    auto level = trace_level(ctx.trace);
    ctx.text << decomp::status_name(v.status) << "\n";
    ctx.text << "mode: " << decomp::mode_name(v.mode) << ", probes: " << v.probes.size() << "\n";
    if (v.mode == decomp::DecideMode::Exhaustive)
        ctx.text << "candidates: " << v.candidates << ", refuted: " << v.refuted << ", survivors: " << v.survivors
                 << "\n";
    if (level != io::TraceLevel::None)
        for (const auto& s : v.steps) {
            ctx.text << "  [" << s.rule << "] " << s.probe << ": " << s.detail;
            if (s.integral) ctx.text << (*s.integral ? " (integral)" : " (not integral)");
            ctx.text << "\n";
            if (level == io::TraceLevel::Full && s.query) ctx.text << "    query: " << endo_str(*s.query) << "\n";
        }
    if (v.witness) ctx.text << "witness: " << io::candidate_json(*v.witness).dump() << "\n";
    ctx.results["verdict"] = io::verdict_json(v, level);
    ctx.exit_code = exit_for(v.status);
}

// ---- decide ----

struct DecideArgs {
    std::string model, mode = "prooftrace";
    int threads = 0;
};

void run_decide(Context& ctx, const DecideArgs& a) {
    ctx.input_files.push_back(a.model);
    auto m = io::load_model(a.model);
    ctx.results["model"] = io::model_json(m);
    auto mode = a.mode == "exhaustive" ? decomp::DecideMode::Exhaustive : decomp::DecideMode::ProofTrace;
    decomp::DecideOptions opt;
    opt.threads = a.threads;
    print_verdict(ctx, decomp::decide(m, mode, opt));
}

// ---- conv-table ----

void run_conv_table(Context& ctx, const std::string& path) {
    ctx.input_files.push_back(path);
    auto m = io::load_model(path);
    auto grids = corr::build_grids(m);
    Json rows = Json::array();
    const std::pair<const char*, decomp::Grid> kinds[3] = {
        {"Theta", decomp::Grid::W}, {"A1", decomp::Grid::U}, {"A2", decomp::Grid::V}};
    for (const auto& p : decomp::probes_for(m)) {
        for (const auto& [gname, kind] : kinds) {
            const auto& grid = grids.grid(kind);
            for (int i = 0; i < m.g(); ++i)
                for (int j = 0; j < m.g(); ++j) {
                    auto val = corr::conv(p.endo, grid[i][j], m);
                    ctx.text << p.name << "\t" << gname << "(" << i + 1 << "," << j + 1 << ")\t" << endo_str(val)
                             << "\n";
                    Json r;
                    r["probe"] = p.name;
                    r["grid"] = gname;
                    r["cell"] = {i + 1, j + 1};
                    r["value"] = io::matrix_json(val);
                    rows.push_back(r);
                }
        }
    }
    ctx.results["model"] = io::model_json(m);
    ctx.results["table"] = rows;
}

// ---- motive ----

void dims_text(Context& ctx, const motcalc::DimVector& v) {
    ctx.text << "weight\tdim\n";
    for (std::size_t w = 0; w < v.size(); ++w) ctx.text << w << "\t" << v[w] << "\n";
}

std::vector<long> split_longs(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidInput("expected comma-separated integers, got '" + s + "'");
        }
    }
    return out;
}

motcalc::SurfaceParams surface_params(const std::string& s) {
    auto v = split_longs(s);
    if (v.size() != 3) throw InvalidInput("surface must be b2,rho,q");
    return {v[0], v[1], v[2]};
}

struct MotiveArgs {
    long g = 1, b2 = 0, rho = 0, q = 0, d = 3, points = 0;
    int n = 4, ambient = 4;
    bool no_split = false;
    std::vector<long> curves;
    std::vector<std::string> surfaces;
};

void run_motive_curve(Context& ctx, const MotiveArgs& a) {
    auto m = motcalc::ck_curve(a.g);
    ctx.text << m.str() << "\n";
    dims_text(ctx, m.dims());
    ctx.results["motive"] = m.str();
    ctx.results["dims"] = io::dims_json(m.dims());
}

void run_motive_surface(Context& ctx, const MotiveArgs& a) {
    auto m = motcalc::ck_surface(a.b2, a.rho, a.q);
    ctx.text << m.str() << "\n";
    dims_text(ctx, m.dims());
    Int tr = a.b2 - a.rho;
    ctx.text << "M2_tr: " << tr << "\n";
    ctx.results["motive"] = m.str();
    ctx.results["dims"] = io::dims_json(m.dims());
    ctx.results["m2_tr"] = io::rat_json(Rat(tr));
}

void run_motive_product(Context& ctx, const MotiveArgs& a) {
    auto r = motcalc::product_of_curves(a.g, !a.no_split);
    ctx.text << r.motive.str() << "\n";
    dims_text(ctx, r.dims);
    ctx.text << "b2: " << r.b2 << "\n";
    ctx.results["motive"] = r.motive.str();
    ctx.results["dims"] = io::dims_json(r.dims);
    ctx.results["b2"] = io::rat_json(Rat(r.b2));
    if (r.elliptically_split) {
        ctx.text << "NS rank: " << r.ns_rank << "\nM2_alg: " << r.m2_alg << "\nM2_tr: " << r.m2_tr << "\n";
        ctx.text << "grid blocks: " << r.grid_blocks << " of dimension 2\n";
        ctx.results["ns_rank"] = io::rat_json(Rat(r.ns_rank));
        ctx.results["m2_alg"] = io::rat_json(Rat(r.m2_alg));
        ctx.results["m2_tr"] = io::rat_json(Rat(r.m2_tr));
        ctx.results["grid_blocks"] = io::rat_json(Rat(r.grid_blocks));
    }
}

void run_motive_hypersurface(Context& ctx, const MotiveArgs& a) {
    auto ring = motcalc::hypersurface_ck(a.n, a.d);
    Json pis = Json::array();
    for (std::size_t w = 0; w < ring.projectors().size(); ++w) {
        std::string desc = ring.describe(ring.projectors()[w]);
        Int dim = ring.dimension(static_cast<int>(w));
        ctx.text << "pi_" << w << " = " << desc << "\tdim " << dim << "\n";
        Json p;
        p["weight"] = w;
        p["projector"] = desc;
        p["dim"] = io::rat_json(Rat(dim));
        pis.push_back(p);
    }
    bool ok = ring.verify();
    ctx.text << "idempotent, orthogonal, summing to the diagonal: " << (ok ? "yes" : "no") << "\n";
    ctx.results["projectors"] = pis;
    ctx.results["verified"] = ok;
    if (!ok) ctx.exit_code = 1;
}

std::vector<motcalc::Center> centers_of(const MotiveArgs& a) {
    std::vector<motcalc::Center> cs;
    for (long k = 0; k < a.points; ++k) cs.push_back(motcalc::Center::point());
    for (long g : a.curves) cs.push_back(motcalc::Center::curve(g));
    for (const auto& s : a.surfaces) {
        auto p = surface_params(s);
        cs.push_back(motcalc::Center::surf(p.b2, p.rho, p.q));
    }
    return cs;
}

void run_motive_blowup(Context& ctx, const MotiveArgs& a) {
    auto r = motcalc::blowup_chain(motcalc::projective_space(a.ambient), centers_of(a), a.ambient);
    Json rows = Json::array();
    for (const auto& [name, dims] : r.rows) {
        ctx.text << name << ":";
        for (std::size_t w = 0; w < dims.size(); ++w)
            if (dims[w] != 0) ctx.text << " L^" << w / 2 << "x" << dims[w];
        ctx.text << "\n";
        Json row;
        row["centers"] = name;
        row["dims"] = io::dims_json(dims);
        rows.push_back(row);
    }
    dims_text(ctx, r.dims);
    ctx.results["rows"] = rows;
    ctx.results["dims"] = io::dims_json(r.dims);
}

void run_motive_ledger(Context& ctx, const MotiveArgs& a) {
    std::vector<motcalc::SurfaceParams> ss;
    for (const auto& s : a.surfaces) ss.push_back(surface_params(s));
    auto r = motcalc::cubic_rationality_ledger(ss, a.curves, a.points);
    ctx.text << "b4 " << r.b4 << ", algebraic " << r.rho2 << ", primitive " << r.prim_dim << "\n";
    Json entries = Json::array();
    for (const auto& e : r.surfaces) {
        ctx.text << "surface b2=" << e.surface.b2 << " rho=" << e.surface.rho << ": tr " << e.tr_dim << ", "
                 << motcalc::host_verdict_text(e.verdict) << "\n";
        Json j;
        j["b2"] = e.surface.b2;
        j["rho"] = e.surface.rho;
        j["tr"] = io::rat_json(Rat(e.tr_dim));
        j["verdict"] = motcalc::host_verdict_text(e.verdict);
        entries.push_back(j);
    }
    ctx.text << r.summary << "\n";
    ctx.results["primitive"] = io::rat_json(Rat(r.prim_dim));
    ctx.results["surfaces"] = entries;
    ctx.results["summary"] = r.summary;
}

// ---- fermat ----

struct FermatArgs {
    int phi = 1;
    std::string sigma, morphism;
    std::vector<long> primes;
    bool decide = false, listed = false;
};

fermat::Perm3 parse_sigma(const std::string& s) {
    auto v = split_longs(s);
    if (v.size() != 3) throw InvalidInput("sigma must be a one-line permutation like 2,1,3");
    fermat::Perm3 p{int(v[0] - 1), int(v[1] - 1), int(v[2] - 1)};
    fermat::Perm3 sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != fermat::Perm3{0, 1, 2}) throw InvalidInput("sigma is not a permutation of 1,2,3");
    return p;
}

fermat::DegreeOptions degree_options(const FermatArgs& a) {
    fermat::DegreeOptions opt;
    for (long p : a.primes) opt.primes.push_back(static_cast<std::uint64_t>(p));
    return opt;
}

void run_fermat_pullback(Context& ctx, const FermatArgs& a) {
    fermat::CurveMorphism phi = fermat::phi1();
    if (!a.morphism.empty()) {
        ctx.input_files.push_back(a.morphism);
        phi = io::morphism_from_json(io::read_json_file(a.morphism));
    } else {
        phi = fermat::phi_by_index(a.phi);
    }
    if (!a.sigma.empty()) phi = fermat::compose_with(phi, parse_sigma(a.sigma));
    fermat::Poly2 f = fermat::pullback(phi);
    auto rep = fermat::rep_membership(f);
    ctx.text << f.str() << " * omega\n";
    ctx.text << "representation: " << fermat::rep_name(rep) << "\n";
    ctx.results["morphism"] = phi.name;
    ctx.results["form"] = phi.tau.name;
    ctx.results["coefficient"] = f.str();
    ctx.results["representation"] = fermat::rep_name(rep);
}

void run_fermat_degrees(Context& ctx, const FermatArgs& a) {
    auto opt = degree_options(a);
    if (!a.morphism.empty()) {
        ctx.input_files.push_back(a.morphism);
        auto phi = io::morphism_from_json(io::read_json_file(a.morphism));
        auto d = fermat::degree(phi, opt);
        ctx.text << d.degree << "\n";
        ctx.results["degree"] = io::rat_json(Rat(d.degree));
        return;
    }
    auto inst = fermat::build_c6_instance(opt);
    std::string line;
    Json list = Json::array();
    for (const auto& m : inst.morphisms) {
        if (!line.empty()) line += ",";
        line += std::to_string(m.degree.degree);
        Json j;
        j["morphism"] = m.name;
        j["degree"] = io::rat_json(Rat(m.degree.degree));
        j["listed"] = io::rat_json(Rat(m.listed_degree));
        Json primes = Json::array();
        for (const auto& e : m.degree.per_prime) {
            Json pj;
            pj["p"] = e.p;
            pj["degree"] = io::rat_json(Rat(e.degree));
            primes.push_back(pj);
        }
        j["primes"] = primes;
        list.push_back(j);
    }
    ctx.text << line << "\n";
    for (const auto& n : inst.notes) ctx.text << "note: " << n << "\n";
    ctx.results["degrees"] = list;
    ctx.results["notes"] = inst.notes;
}

void run_fermat_instance(Context& ctx, const FermatArgs& a) {
    auto inst = fermat::build_c6_instance(degree_options(a));
    auto exps = [](const std::vector<Int>& v) {
        std::string s;
        for (const auto& e : v) s += (s.empty() ? "" : ",") + e.get_str();
        return s;
    };
    ctx.text << "g: " << inst.g << "\n";
    ctx.text << "exponents: " << exps(inst.exponents) << "\n";
    ctx.text << "listed exponents: " << exps(inst.listed_exponents) << "\n";
    ctx.text << "dim M2_tr: " << inst.m2_tr << "\n";
    ctx.text << "ranks: " << inst.rank_g1 << " over all permutations, " << inst.rank_g2 << " over the second set\n";
    for (const auto& m : inst.morphisms)
        ctx.text << "  " << m.name << ": " << m.form.str() << " * omega, " << fermat::rep_name(m.rep) << ", degree "
                 << m.degree.degree << "\n";
    for (const auto& n : inst.notes) ctx.text << "note: " << n << "\n";
    Json ms = Json::array();
    for (const auto& m : inst.morphisms) {
        Json j;
        j["morphism"] = m.name;
        j["coefficient"] = m.form.str();
        j["representation"] = fermat::rep_name(m.rep);
        j["degree"] = io::rat_json(Rat(m.degree.degree));
        ms.push_back(j);
    }
    ctx.results["g"] = inst.g;
    ctx.results["morphisms"] = ms;
    Json e = Json::array(), l = Json::array();
    for (const auto& x : inst.exponents) e.push_back(io::rat_json(Rat(x)));
    for (const auto& x : inst.listed_exponents) l.push_back(io::rat_json(Rat(x)));
    ctx.results["exponents"] = e;
    ctx.results["listed_exponents"] = l;
    ctx.results["m2_tr"] = io::rat_json(Rat(inst.m2_tr));
    ctx.results["notes"] = inst.notes;
    if (a.decide) {
        const auto& model = a.listed ? inst.listed_model : inst.model;
        ctx.text << "deciding with " << (a.listed ? "listed" : "computed") << " exponents\n";
        print_verdict(ctx, decomp::decide(model, decomp::DecideMode::ProofTrace));
    }
}

// ---- av ----

struct AvArgs {
    std::string model, matrix;
    std::vector<std::string> subsets;
    bool all = false;
};

cmlat::Subset parse_subset(const std::string& s, int g) {
    cmlat::Subset k = 0;
    for (long i : split_longs(s)) {
        if (i < 1 || i > g) throw InvalidInput("subset index out of range: " + std::to_string(i));
        k |= cmlat::singleton(static_cast<int>(i - 1));
    }
    return k;
}

std::string subset_str(cmlat::Subset k, int g) {
    std::string s;
    for (int i = 0; i < g; ++i)
        if (cmlat::contains(k, i)) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
    return "{" + s + "}";
}

void run_av(Context& ctx, const AvArgs& a) {
    ctx.input_files.push_back(a.model);
    auto m = io::load_model(a.model);
    const int g = m.g();
    ctx.results["model"] = io::model_json(m);
    ctx.text << "atom exponents:";
    for (const auto& n : m.atom_exponents()) ctx.text << " " << n;
    ctx.text << "\n";
    auto floor = m.hypothesis_floor();
    ctx.text << "least proper exponent: " << (floor ? floor->get_str() : "none") << "\n";
    ctx.results["hypothesis_floor"] = floor ? io::rat_json(Rat(*floor)) : Json(nullptr);
    Json ex = Json::array();
    auto report = [&](cmlat::Subset k) {
        Int e = m.exponent(k);
        ctx.text << "n" << subset_str(k, g) << " = " << e << "\n";
        Json j;
        j["subset"] = subset_str(k, g);
        j["exponent"] = io::rat_json(Rat(e));
        ex.push_back(j);
    };
    for (const auto& s : a.subsets) report(parse_subset(s, g));
    if (a.all) {
        if (g > 12) throw InvalidInput("--all is limited to g <= 12");
        for (cmlat::Subset k = 1; k < cmlat::full_set(g); ++k) report(k);
    }
    ctx.results["exponents"] = ex;
    if (!a.matrix.empty()) {
        ctx.input_files.push_back(a.matrix);
        Json j = io::read_json_file(a.matrix);
        if (!j.is_array() || j.size() != static_cast<std::size_t>(g)) throw InvalidInput("matrix must have g rows");
        cmlat::EndoQ x = m.zero();
        for (int r = 0; r < g; ++r) {
            if (!j[r].is_array() || j[r].size() != static_cast<std::size_t>(g))
                throw InvalidInput("matrix must have g columns");
            for (int c = 0; c < g; ++c) {
                const auto& z = j[r][c];
                x(r, c) = z.is_object() ? exact::QuadInt(m.d(), io::rat_from_json(z.value("re", Json(0))),
                                                         io::rat_from_json(z.value("im", Json(0))))
                                        : exact::QuadInt(m.d(), io::rat_from_json(z));
            }
        }
        bool integral = m.is_integral(x);
        ctx.text << "integral: " << (integral ? "yes" : "no") << "\n";
        ctx.results["integral"] = integral;
    }
}

}  // namespace

int main(int argc, char** argv) {
    Context ctx;
    for (int k = 1; k < argc; ++k) {
        std::string t = argv[k];
        if (t == "--timing") continue;
        if (t == "--json") {
            ++k;
            continue;
        }
        if (t.rfind("--json=", 0) == 0) continue;
        ctx.echo.push_back(t);
    }

    CLI::App app{"motivix: exact correspondence calculus for self-products of curves"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(version));
    app.add_option("--json", ctx.json_out, "write the JSON report to a file, - for stdout");
    app.add_flag("--timing", ctx.timing, "add wall-clock timing to the report");
    app.add_option("--trace", ctx.trace, "trace verbosity")->check(CLI::IsMember({"none", "steps", "full"}));

    std::function<void()> action;

    DecideArgs da;
    auto* dec = app.add_subcommand("decide", "run the indecomposability decision on a model file");
    dec->add_option("model", da.model)->required();
    dec->add_option("--mode", da.mode)->check(CLI::IsMember({"exhaustive", "prooftrace"}));
    dec->add_option("--threads", da.threads)->check(CLI::NonNegativeNumber);
    dec->callback([&] { action = [&] { run_decide(ctx, da); }; });

    std::string conv_model;
    auto* conv = app.add_subcommand("conv-table", "convolution values of every probe on every grid cell");
    conv->add_option("model", conv_model)->required();
    conv->callback([&] { action = [&] { run_conv_table(ctx, conv_model); }; });

    MotiveArgs ma;
    auto* mot = app.add_subcommand("motive", "Chow-Kunneth dimension accounting");
    mot->require_subcommand(1);
    mot->fallthrough();
    auto* mc = mot->add_subcommand("curve", "curve of genus g");
    mc->add_option("--g", ma.g)->required()->check(CLI::NonNegativeNumber);
    mc->callback([&] { action = [&] { run_motive_curve(ctx, ma); }; });
    auto* msf = mot->add_subcommand("surface", "surface with given b2, Picard rank and irregularity");
    msf->add_option("--b2", ma.b2)->required();
    msf->add_option("--rho", ma.rho)->required();
    msf->add_option("--q", ma.q);
    msf->callback([&] { action = [&] { run_motive_surface(ctx, ma); }; });
    auto* mp = mot->add_subcommand("product", "self-product of a curve");
    mp->add_option("--g", ma.g)->required()->check(CLI::PositiveNumber);
    mp->add_flag("--no-split", ma.no_split, "Jacobian not assumed elliptically split");
    mp->callback([&] { action = [&] { run_motive_product(ctx, ma); }; });
    auto* mh = mot->add_subcommand("hypersurface", "projectors of a smooth hypersurface");
    mh->add_option("--n", ma.n)->required()->check(CLI::PositiveNumber);
    mh->add_option("--d", ma.d)->required()->check(CLI::PositiveNumber);
    mh->callback([&] { action = [&] { run_motive_hypersurface(ctx, ma); }; });
    auto* mb = mot->add_subcommand("blowup", "blow-up chain of projective space");
    mb->add_option("--points", ma.points)->check(CLI::NonNegativeNumber);
    mb->add_option("--curve", ma.curves, "genus of a blown-up curve (repeatable)");
    mb->add_option("--surface", ma.surfaces, "b2,rho,q of a blown-up surface (repeatable)");
    mb->add_option("--ambient", ma.ambient)->check(CLI::PositiveNumber);
    mb->callback([&] { action = [&] { run_motive_blowup(ctx, ma); }; });
    auto* ml = mot->add_subcommand("ledger", "cubic fourfold hosting ledger");
    ml->add_option("--points", ma.points)->check(CLI::NonNegativeNumber);
    ml->add_option("--curve", ma.curves);
    ml->add_option("--surface", ma.surfaces);
    ml->callback([&] { action = [&] { run_motive_ledger(ctx, ma); }; });

    FermatArgs fa;
    auto* fer = app.add_subcommand("fermat", "the sextic x^6 + y^6 + 1 = 0 and its elliptic quotients");
    fer->require_subcommand(1);
    fer->fallthrough();
    auto* fpb = fer->add_subcommand("pullback", "pull back the target differential");
    fpb->add_option("--phi", fa.phi)->check(CLI::Range(1, 3));
    fpb->add_option("--sigma", fa.sigma, "one-line coordinate permutation, e.g. 2,1,3");
    fpb->add_option("--morphism", fa.morphism, "morphism JSON file");
    fpb->callback([&] { action = [&] { run_fermat_pullback(ctx, fa); }; });
    auto* fdg = fer->add_subcommand("degrees", "morphism degrees by fiber counting");
    fdg->add_option("--primes", fa.primes)->delimiter(',');
    fdg->add_option("--morphism", fa.morphism, "morphism JSON file");
    fdg->callback([&] { action = [&] { run_fermat_degrees(ctx, fa); }; });
    auto* fin = fer->add_subcommand("instance", "assemble the genus-10 model");
    fin->add_option("--primes", fa.primes)->delimiter(',');
    fin->add_flag("--decide", fa.decide, "run the decision procedure");
    fin->add_flag("--listed", fa.listed, "decide with the listed exponents instead of the computed ones");
    fin->callback([&] { action = [&] { run_fermat_instance(ctx, fa); }; });

    AvArgs aa;
    auto* av = app.add_subcommand("av", "exponents and integrality queries on a model");
    av->add_option("model", aa.model)->required();
    av->add_option("--subset", aa.subsets, "1-based indices, comma-separated (repeatable)");
    av->add_flag("--all", aa.all, "every proper nonempty subset");
    av->add_option("--matrix", aa.matrix, "JSON matrix file to test for integrality");
    av->callback([&] { action = [&] { run_av(ctx, aa); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis not met: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::string digest_input;
    for (const auto& t : ctx.echo) digest_input += t + '\0';
    for (const auto& f : ctx.input_files) digest_input += read_bytes(f);

    Json report;
    report["version"] = version;
    report["command"] = ctx.echo;
    report["inputs_digest"] = io::fnv1a_hex(digest_input);
    report["results"] = ctx.results;
    if (ctx.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        report["timing_ms"] = ms.count();
        ctx.text << "time: " << ms.count() << " ms\n";
    }

    if (ctx.json_out == "-") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << ctx.text.str();
        if (!ctx.json_out.empty()) {
            std::ofstream out(ctx.json_out, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << ctx.json_out << "\n";
                return 1;
            }
            out << report.dump(2) << "\n";
        }
    }
    return ctx.exit_code;
}
