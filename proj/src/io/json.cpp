#include "motivix/io/json.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace motivix::io {

using exact::Int;
using exact::Rat;

Json int_json(const Int& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

Json rat_json(const Rat& r) { return Json::array({int_json(r.get_num()), int_json(r.get_den())}); }

namespace {

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw InvalidInput("bad integer '" + j.get<std::string>() + "'");
        }
    }
    throw InvalidInput("expected an integer, got " + j.dump());
}

}  // namespace

Rat rat_from_json(const Json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw InvalidInput("rational must be [num, den]");
        Int n = int_from_json(j[0]), d = int_from_json(j[1]);
        if (d == 0) throw InvalidInput("zero denominator");
        Rat r(n, d);
        r.canonicalize();
        return r;
    }
    if (j.is_string() && j.get<std::string>().find('/') != std::string::npos) {
        try {
            return exact::parse_rat(j.get<std::string>());
        } catch (const Error&) {
            throw InvalidInput("bad rational '" + j.get<std::string>() + "'");
        }
    }
    return Rat(int_from_json(j));
}

Json quad_json(const exact::QuadInt& z) {
    Json o;
    o["re"] = rat_json(z.re());
    o["im"] = rat_json(z.im());
    return o;
}

Json matrix_json(const exact::QuadMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(quad_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

cmlat::ModelSpec model_spec_from_json(const Json& j) {
    try {
        if (!j.is_object()) throw InvalidInput("model must be a JSON object");
        cmlat::ModelSpec s;
        s.d = j.value("d", 1L);
        s.g = j.at("g").get<int>();
        if (s.g < 1 || s.g > 62) throw InvalidInput("g must lie in 1..62");
        if (s.d < 1) throw InvalidInput("d must be positive");
        std::string mode = j.value("mode", std::string("lattice"));
        if (mode == "lattice")
            s.mode = cmlat::Mode::Lattice;
        else if (mode == "axiomatic")
            s.mode = cmlat::Mode::Axiomatic;
        else
            throw InvalidInput("mode must be lattice or axiomatic");
        std::string order = j.value("order", std::string("gaussian"));
        if (order == "gaussian")
            s.order = cmlat::Order::Gaussian;
        else if (order == "maximal")
            s.order = cmlat::Order::Maximal;
        else
            throw InvalidInput("order must be gaussian or maximal");
        if (j.contains("glue")) {
            for (const auto& v : j.at("glue")) {
                std::vector<exact::QuadInt> row;
                for (const auto& z : v) {
                    if (z.is_object())
                        row.emplace_back(s.d, rat_from_json(z.value("re", Json(0))), rat_from_json(z.value("im", Json(0))));
                    else
                        row.emplace_back(s.d, rat_from_json(z), Rat(0));
                }
                s.glue.push_back(std::move(row));
            }
        }
        if (j.contains("exponents"))
            for (const auto& e : j.at("exponents")) s.exponents.push_back(rat_from_json(e).get_num());
        if (s.mode == cmlat::Mode::Axiomatic && s.exponents.size() != static_cast<std::size_t>(s.g))
            throw InvalidInput("axiomatic model needs one exponent per atom");
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed model: ") + e.what());
    }
}

cmlat::AbelianModel load_model(const std::string& path) { return cmlat::build_model(model_spec_from_json(read_json_file(path))); }

Json model_json(const cmlat::AbelianModel& m) {
    Json o;
    o["d"] = m.d();
    o["g"] = m.g();
    o["mode"] = m.mode() == cmlat::Mode::Lattice ? "lattice" : "axiomatic";
    o["order"] = m.order() == cmlat::Order::Gaussian ? "gaussian" : "maximal";
    Json atoms = Json::array();
    for (const auto& n : m.atom_exponents()) atoms.push_back(rat_json(Rat(n)));
    o["atom_exponents"] = atoms;
    return o;
}

Json candidate_json(const decomp::Candidate& c) {
    auto grid = [&](decomp::Grid k) {
        Json rows = Json::array();
        for (int i = 0; i < c.g; ++i) {
            std::string row;
            for (int j = 0; j < c.g; ++j) row += c.at(k, i, j) == decomp::Side::Lambda ? 'L' : 'X';
            rows.push_back(row);
        }
        return rows;
    };
    Json o;
    o["g"] = c.g;
    o["A1"] = grid(decomp::Grid::U);
    o["A2"] = grid(decomp::Grid::V);
    o["Theta"] = grid(decomp::Grid::W);
    std::string l;
    for (auto s : c.L) l += s == decomp::Side::Lambda ? 'L' : 'X';
    o["B"] = l;
    return o;
}

Json verdict_json(const decomp::Verdict& v, TraceLevel level) {
    Json o;
    o["status"] = decomp::status_name(v.status);
    o["mode"] = decomp::mode_name(v.mode);
    o["probes"] = v.probes;
    if (level != TraceLevel::None) {
        Json steps = Json::array();
        for (const auto& s : v.steps) {
            Json st;
            st["probe"] = s.probe;
            st["rule"] = s.rule;
            st["integral"] = s.integral ? Json(*s.integral) : Json(nullptr);
            st["detail"] = s.detail;
            if (level == TraceLevel::Full && s.query) st["query"] = matrix_json(*s.query);
            steps.push_back(st);
        }
        o["steps"] = steps;
    }
    o["witness"] = v.witness ? candidate_json(*v.witness) : Json(nullptr);
    if (v.mode == decomp::DecideMode::Exhaustive) {
        Json counts;
        counts["candidates"] = rat_json(Rat(v.candidates));
        counts["refuted"] = rat_json(Rat(v.refuted));
        counts["survivors"] = rat_json(Rat(v.survivors));
        o["counts"] = counts;
    }
    return o;
}

Json dims_json(const motcalc::DimVector& v) {
    Json a = Json::array();
    for (const auto& z : v) a.push_back(rat_json(Rat(z)));
    return a;
}

fermat::CurveMorphism morphism_from_json(const Json& j) {
    try {
        if (!j.is_object()) throw InvalidInput("morphism must be a JSON object");
        fermat::PlaneCurve src = fermat::plane_curve(j.at("source").get<std::string>());
        fermat::PlaneCurve tgt = fermat::plane_curve(j.at("target").get<std::string>(), "u", "v");
        fermat::TargetForm tau = fermat::du_over_v();
        if (j.contains("form")) {
            const auto& f = j.at("form");
            std::string P = f.value("P", std::string("0")), Q = f.value("Q", std::string("0"));
            tau = {"(" + P + ")du + (" + Q + ")dv", fermat::parse_ratfun(P, "u", "v"), fermat::parse_ratfun(Q, "u", "v")};
        }
        return fermat::CurveMorphism(j.value("name", std::string("phi")), src, tgt,
                                     fermat::parse_ratfun(j.at("u").get<std::string>()),
                                     fermat::parse_ratfun(j.at("v").get<std::string>()), tau);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed morphism: ") + e.what());
    }
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

}  // namespace motivix::io
