#include "cablefloer/cfd.hpp"
#include "cablefloer/error.hpp"
#include "doctest.h"

using namespace cablefloer;

namespace {

bool is_h_power(const Grading& g, const Grading& h) {
    for (int64_t k = -12; k <= 12; ++k)
        if (gr_pow(h, k) == g) return true;
    return false;
}

size_t count_label(const TypeDModule& d, Chord c) {
    size_t n = 0;
    for (auto& a : d.arrows) n += a.label == c;
    return n;
}

}  // namespace

TEST_CASE("unknot type D modules") {
    auto d0 = build_cfd(catalog_get("unknot"), 0);
    REQUIRE(d0.gens.size() == 1);
    REQUIRE(d0.arrows.size() == 1);
    CHECK(d0.arrows[0].label == Chord::R12);
    CHECK(d0.arrows[0].src == d0.arrows[0].dst);
    CHECK(check_typeD(d0).ok());

    auto dm = build_cfd(catalog_get("unknot"), -1);
    CHECK(dm.t == 1);
    REQUIRE(dm.gens.size() == 2);
    CHECK(dm.gens[1].id == "mu1");
    CHECK(dm.arrows.size() == 2);
    CHECK(count_label(dm, Chord::R1) == 1);
    CHECK(count_label(dm, Chord::R3) == 1);
    CHECK(check_typeD(dm).ok());
}

TEST_CASE("trefoil type D module at r=0") {
    auto d = build_cfd(catalog_get("trefoil_rh"), 0);
    CHECK(d.t == 2);
    size_t iota0 = 0, kappa = 0, hchain = 0, mu = 0;
    for (auto& g : d.gens) {
        iota0 += g.idem == 0;
        kappa += g.role == DRole::Kappa;
        hchain += g.role == DRole::HChain;
        mu += g.role == DRole::Mu;
    }
    CHECK(iota0 == 3);
    CHECK(kappa == 1);
    CHECK(hchain == 1);
    CHECK(mu == 2);
    // chain shapes: vertical 2 arrows, horizontal 2, unstable t=2 gives 3
    CHECK(d.arrows.size() == 7);
    CHECK(check_typeD(d).ok());
}

TEST_CASE("type D condition detects a parity mismatch") {
    TypeDModule d;
    d.gens = {{"x", 0, DRole::Xi, 0, 0}, {"y", 1, DRole::Kappa, 1, 1}, {"z", 0, DRole::Xi, 0, 0}};
    d.arrows = {{0, 1, Chord::R1}, {1, 2, Chord::R2}};
    CHECK_FALSE(check_typeD(d).ok());
    d.arrows.push_back({0, 2, Chord::R12});
    CHECK_FALSE(check_typeD(d).ok());
    TypeDModule e = d;
    e.arrows = {{0, 1, Chord::R2}};
    CHECK_FALSE(check_typeD(e).ok());  // idempotent mismatch
}

TEST_CASE("type D modules for the catalog over a range of framings") {
    for (std::string name : {"unknot", "trefoil_rh", "trefoil_lh", "figure_eight", "torus(5,3)"}) {
        ModelComplex c = catalog_get(name);
        auto sb = simultaneous_basis(c);
        int64_t lv = 0, lh = 0;
        for (auto& p : sb.vertical.pairs) lv += p.length;
        for (auto& p : sb.horizontal.pairs) lh += p.length;
        for (int64_t r = -3; r <= 3; ++r) {
            CAPTURE(name);
            CAPTURE(r);
            auto d = build_cfd(c, r);
            int64_t t = d.t < 0 ? -d.t : d.t;
            CHECK(d.gens.size() == c.gens.size() + static_cast<size_t>(lv + lh + t));
            CHECK(d.t == 2 * tau(c) - r);
            CHECK(check_typeD(d).ok());
            for (auto& g : d.gens)
                if (g.idem == 1) {
                    size_t deg = 0;
                    for (auto& a : d.arrows) deg += (a.src != a.dst) && (d.gens[a.src].id == g.id || d.gens[a.dst].id == g.id);
                    CHECK(deg == 2);
                }
            auto gd = grade_cfd(d);
            CHECK(gd.period == cfd_period(r));
            if (r == 0) CHECK(gd.stated_period_consistent);
        }
    }
}

TEST_CASE("type D gradings") {
    auto d = build_cfd(catalog_get("trefoil_rh"), 0);
    auto gd = grade_cfd(d);
    Grading h = gd.period;
    // xi2 of an epsilon = 1 companion is gr(rho23)^tau
    CHECK(gd.gr[d.index("x3")] == gr_of_chord(Chord::R23));
    // kappa against the D123 rule from xi2 = x3 (A=-1, M=-2)
    Grading kap = gr_compose(gr_invert(gr_lambda()),
                             gr_compose(gr_invert(gr_of_chord(Chord::R123)), iota0_grading(-1, -2)));
    CHECK(is_h_power(gr_compose(gr_invert(gd.gr[d.index("kappa1_1")]), kap), h));
    CHECK(gd.stated_period == cfd_period(0));

    auto dl = build_cfd(catalog_get("trefoil_lh"), 0);
    auto gl = grade_cfd(dl);
    CHECK(gl.gr[dl.index(dl.xi0)] == gr_compose(gr_pow(gr_lambda(), 2), gr_of_chord(Chord::R23)));

    // the stated period does not close the unstable loop once r != 0
    auto du = build_cfd(catalog_get("unknot"), 1);
    auto gu = grade_cfd(du);
    CHECK_FALSE(gu.stated_period_consistent);
    CHECK(gu.period.str() == "(-1;-1,-1;0)");
}
