#include "motivix/fermat/instance.hpp"

#include "motivix/motcalc/motive.hpp"

#include <future>

namespace motivix::fermat {

C6Instance build_c6_instance(const DegreeOptions& opt) {
    C6Instance inst;
    std::vector<std::pair<int, Perm3>> plan;
    for (const auto& s : all_perm3()) plan.push_back({1, s});
    for (const auto& s : g2_used()) plan.push_back({2, s});
    plan.push_back({3, Perm3{0, 1, 2}});
    const long listed[4] = {0, 6, 24, 4};

    std::vector<std::future<C6Morphism>> jobs;
    for (const auto& [base, s] : plan) {
        jobs.push_back(std::async(std::launch::async, [base, s, &opt, &listed] {
            CurveMorphism phi = phi_by_index(base);
            C6Morphism m;
            m.base = base;
            m.sigma = s;
            m.form = act_on_coefficient(s, pullback(phi));
            m.rep = rep_membership(m.form);
            CurveMorphism twisted = compose_with(phi, s);
            m.name = twisted.name;
            m.degree = degree(twisted, opt);
            m.listed_degree = listed[base];
            return m;
        }));
    }
    for (auto& j : jobs) inst.morphisms.push_back(j.get());

    std::vector<Poly2> g1, g2, g2l;
    for (const auto& m : inst.morphisms) {
        inst.exponents.push_back(Int(m.degree.degree));
        inst.listed_exponents.push_back(Int(m.listed_degree));
        if (m.base == 1) g1.push_back(m.form);
        if (m.base == 2) g2.push_back(m.form);
        if (m.degree.degree != m.listed_degree)
            inst.notes.push_back(m.name + ": computed degree " + std::to_string(m.degree.degree) + ", listed " +
                                 std::to_string(m.listed_degree));
    }
    const Poly2 f2 = pullback(phi2());
    for (const auto& s : g2_listed()) g2l.push_back(act_on_coefficient(s, f2));
    inst.rank_g1 = form_rank(g1);
    inst.rank_g2 = form_rank(g2);
    inst.rank_g2_listed = form_rank(g2l);
    if (inst.rank_g2_listed < 3)
        inst.notes.push_back("the listed second permutation set spans only rank " +
                             std::to_string(inst.rank_g2_listed) + "; using id, (2,1,3), (1,3,2)");

    // E: v² = u³ − 1 has CM by ℤ[(1+√−3)/2]
    cmlat::ModelSpec spec;
    spec.d = 3;
    spec.g = inst.g;
    spec.mode = cmlat::Mode::Axiomatic;
    spec.order = cmlat::Order::Maximal;
    spec.exponents = inst.exponents;
    inst.model = cmlat::build_model(spec);
    spec.exponents = inst.listed_exponents;
    inst.listed_model = cmlat::build_model(spec);
    inst.grids = corr::build_grids(inst.model);
    inst.m2_tr = motcalc::product_of_curves(inst.g).m2_tr;
    return inst;
}

}  // namespace motivix::fermat
