#include <cstdlib>

#include "cablefloer/error.hpp"
#include "cablefloer/tensor.hpp"
#include "doctest.h"

using namespace cablefloer;

namespace {

template <class Map>
int64_t total(const Map& t) {
    int64_t n = 0;
    for (auto& [k, v] : t) n += v;
    return n;
}

int64_t top_alexander(const RankTable& t) {
    int64_t hi = INT64_MIN;
    for (auto& [k, v] : t) hi = std::max(hi, k.first);
    return hi;
}

const std::vector<std::pair<int64_t, int64_t>> kPatterns = {{3, 2}, {5, 2}, {5, 3}};

}  // namespace

TEST_CASE("d_paths over the trefoil module") {
    auto d = build_cfd(catalog_get("trefoil_rh"), 0);
    auto paths = d_paths(d, 8);
    size_t singles = 0;
    for (auto& [s, ends] : paths.paths)
        if (s.size() == 1) singles += ends.size();
    CHECK(singles == d.arrows.size());
    CHECK_FALSE(paths.longer_exist);
    // the unknot's rho12 loop never ends
    CHECK(d_paths(build_cfd(catalog_get("unknot"), 0), 5).longer_exist);
}

TEST_CASE("empty type D module gives the empty complex") {
    auto ar = decompose_pq(3, 2);
    auto a = enumerate_cfa(build_diagram(3, 2), ar, Caps{});
    TypeDModule empty;
    auto c = box_tensor(a, empty, d_paths(empty, 8));
    CHECK(c.gens.empty());
    CHECK(c.arrows.empty());
}

TEST_CASE("hand-built complexes") {
    UComplex c;
    c.graded = true;
    c.gens = {{0, 0, "p", {0, 0}}, {0, 1, "q", {-1, 0}}, {0, 2, "s", {-1, -1}}};
    SUBCASE("zero differential") {
        auto r = hfk_hat_raw(c);
        CHECK(total(r) == 3);
        CHECK(r.at({-1, -1}) == 1);
    }
    SUBCASE("U^0 arrow cancels, U^1 arrow survives U = 0") {
        c.arrows = {{0, 1, 0}};
        CHECK(total(hfk_hat_raw(c)) == 1);
        CHECK_FALSE(verify_cycle_nonzero(c, 1));
        CHECK(verify_cycle_nonzero(c, 2));
        c.arrows = {{0, 2, 1}};
        CHECK(total(hfk_hat_raw(c)) == 3);
        // p and s cancel once U = 1, q is left
        CHECK(total(u1_homology(c)) == 1);
        CHECK(u1_homology(c).at(-1) == 1);
        CHECK(check_grading_drops(c).ok());
    }
    SUBCASE("single generator normalizes to (0,0)") {
        UComplex one;
        one.graded = true;
        one.gens = {{0, 0, "z", {5, -7}}};
        auto raw = hfk_hat_raw(one);
        auto nz = normalization_for(one, raw);
        auto hfk = normalize_gradings(raw, nz);
        CHECK(hfk.size() == 1);
        CHECK(hfk.begin()->first == std::pair<int64_t, int64_t>{0, 0});
        CHECK(euler_poly(hfk) == Laurent::constant(1));
    }
}

TEST_CASE("unknot companion reproduces torus knots") {
    for (auto [p, q] : kPatterns) {
        auto ar = decompose_pq(p, q);
        auto res = compute_cable(catalog_get("unknot"), p, q, 0, Caps{});
        INFO("p=" << p << " q=" << q);
        CHECK(total(res.hfk) == 2 * ar.v * ar.x - 1);
        // staircase oracle: HFK-hat of T(p,q) from its Alexander polynomial
        CHECK(res.hfk == companion_hfk(staircase_from_alexander(torus_alexander(p, q))));
    }
    // other framings give T(p, q + p r), including negative slopes
    for (int64_t r : {-2, -1, 1, 2}) {
        auto res = compute_cable(catalog_get("unknot"), 3, 2, r, Caps{});
        int64_t s = 2 + 3 * r;
        if (s == 1 || s == -1) continue;
        auto oracle = companion_hfk(catalog_get("torus(3," + std::to_string(s) + ")"));
        INFO("r=" << r);
        CHECK(res.hfk == oracle);
    }
}

TEST_CASE("cable invariants over the catalog") {
    for (auto name : {"unknot", "trefoil_rh", "trefoil_lh", "figure_eight"}) {
        auto k = catalog_get(name);
        auto delta = alexander_polynomial(k);
        for (auto [p, q] : kPatterns)
            for (int64_t r = -3; r <= 3; ++r) {
                INFO(name << " p=" << p << " q=" << q << " r=" << r);
                auto res = compute_cable(k, p, q, r, Caps{});
                int64_t qq = q + p * r;
                CHECK(check_d_squared(res.C).ok());
                CHECK(check_grading_drops(res.C).ok());
                CHECK(rank_symmetric(res.hfk));
                CHECK(total(res.hfk) % 2 == 1);
                CHECK(res.euler == cable_alexander(delta, p, qq));
                // Seifert genus of a cable: p g(K) + (p-1)(|q'|-1)/2
                CHECK(top_alexander(res.hfk) == p * genus(k) + (p - 1) * (std::abs(qq) - 1) / 2);
                int64_t u1 = 0;
                for (auto& [a, n] : u1_homology(res.C)) u1 += n;
                CHECK(u1 == 1);
            }
    }
}

TEST_CASE("tensor output is deterministic") {
    auto a = compute_cable(catalog_get("figure_eight"), 5, 3, 1, Caps{});
    auto b = compute_cable(catalog_get("figure_eight"), 5, 3, 1, Caps{});
    CHECK(a.hfk == b.hfk);
    CHECK(a.C.arrows == b.C.arrows);
    REQUIRE(a.C.gens.size() == b.C.gens.size());
    for (size_t i = 0; i < a.C.gens.size(); ++i) {
        CHECK(a.C.gens[i].id == b.C.gens[i].id);
        CHECK(a.C.gens[i].cg == b.C.gens[i].cg);
    }
}

TEST_CASE("budget errors") {
    auto k = catalog_get("trefoil_rh");
    try {
        compute_cable(k, 3, 2, 0, Caps{2, 0});
        FAIL("expected a budget error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Budget);
    }
    try {
        compute_cable(k, 3, 2, 0, Caps{8, 1});
        FAIL("expected a budget error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Budget);
    }
}
