#include "cablefloer/error.hpp"
#include "cablefloer/report.hpp"
#include "doctest.h"

using namespace cablefloer;

namespace doctest {
template <>
struct StringMaker<CanonicalGrading> {
    static String convert(const CanonicalGrading& g) { return canonical_str(g).c_str(); }
};
}  // namespace doctest

namespace {

WitnessReport verdict(const std::string& name, int64_t p, int64_t q, std::optional<int64_t> r, bool force = false) {
    ThinnessOptions o;
    o.framing = r;
    o.force_unstable = force;
    return thinness_verdict(catalog_get(name), name, p, q, o);
}

}  // namespace

TEST_CASE("reduce_parameters") {
    auto a = reduce_parameters(3, 8);
    CHECK(a.q0 == 2);
    CHECK(a.m == 2);
    auto b = reduce_parameters(3, 2);
    CHECK(b.q0 == 2);
    CHECK(b.m == 0);
    auto c = reduce_parameters(3, -4);
    CHECK(c.q0 == 2);
    CHECK(c.m == -2);
    auto expect_kind = [](int64_t p, int64_t q, ErrorKind k) {
        try {
            reduce_parameters(p, q);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == k);
        }
    };
    expect_kind(3, 7, ErrorKind::Unsupported);
    expect_kind(5, 10, ErrorKind::Domain);
    expect_kind(2, 3, ErrorKind::Unsupported);
}

TEST_CASE("trefoil witnesses") {
    auto rep = verdict("trefoil_rh", 3, 2, 0);
    CHECK(rep.kase == WitnessCase::Eps1);
    REQUIRE(rep.witnesses.size() == 2);
    CHECK(rep.witnesses[0].element == "g1|x3");
    CHECK(rep.witnesses[1].element == "g2|kappa1_1");
    CHECK(rep.witnesses[0].computed == CanonicalGrading{0, 3});
    CHECK(rep.witnesses[1].computed == CanonicalGrading{-1, 2});
    CHECK(rep.witnesses[0].closed_form == rep.witnesses[0].computed);
    CHECK(rep.witnesses[1].closed_form == rep.witnesses[1].computed);
    CHECK(rep.witnesses[0].survives);
    CHECK(rep.witnesses[1].survives);
    // same delta: the pair alone does not show non-thinness
    CHECK(rep.lhs == 1);
    CHECK(rep.rhs == 1);
    CHECK_FALSE(rep.pair_violates);
    CHECK(rep.deltas == std::set<int64_t>{-4, -3, -2});
    CHECK(rep.verdict == "not-thin");
}

TEST_CASE("case selection") {
    auto fig = verdict("figure_eight", 3, 2, 1);
    CHECK(fig.kase == WitnessCase::Eps0);
    // xi at the lowest Alexander grading A = -1 is b
    CHECK(fig.witnesses[0].element == "g1|b");
    auto t0 = verdict("trefoil_rh", 3, 2, 2);
    CHECK(t0.t == 0);
    CHECK(t0.kase == WitnessCase::T0);
    auto lh = verdict("trefoil_lh", 3, 2, 0);
    CHECK(lh.kase == WitnessCase::MirrorReduced);
    CHECK(lh.mirror_tried);
    // (-1 mod 3) leaves residue 1 for the mirror pattern
    CHECK_FALSE(lh.mirror_supported);
    auto lh5 = verdict("trefoil_lh", 5, 2, 0);
    CHECK(lh5.mirror_supported);
    CHECK(lh5.mirror_verdict == lh5.verdict);
    auto dflt = verdict("trefoil_rh", 3, 2, std::nullopt);
    CHECK(dflt.t == 1);
    CHECK(dflt.r == 1);
}

TEST_CASE("derived closed forms") {
    for (std::string name : {"trefoil_rh", "figure_eight", "torus(5,3)"})
        for (auto [p, q] : std::vector<std::pair<int64_t, int64_t>>{{3, 2}, {5, 2}, {5, 3}, {7, 4}})
            for (int64_t r = -3; r <= 3; ++r) {
                INFO(name << " p=" << p << " q=" << q << " r=" << r);
                auto rep = verdict(name, p, q, r);
                for (auto& w : rep.witnesses) {
                    INFO(w.element << " computed " << canonical_str(w.computed) << " derived " << canonical_str(w.derived)
                                   << " A=" << w.A << " M=" << w.M);
                    CHECK(w.computed == w.derived);
                    CHECK(w.survives);
                }
                CHECK(rep.verdict == "not-thin");
            }
}

TEST_CASE("derived closed forms, tau = 2 fixture") {
    auto k = parse_complex_file(std::string(FIXTURE_DIR) + "/t52.cfk");
    for (int64_t r = -2; r <= 2; ++r) {
        INFO("r=" << r);
        ThinnessOptions o;
        o.framing = r;
        auto rep = thinness_verdict(k, "t52", 3, 2, o);
        REQUIRE(rep.kase == WitnessCase::Eps1);
        REQUIRE(rep.witnesses.size() == 2);
        // b1 (x) kappa sits one step below a (x) xi in both coordinates
        CHECK(rep.witnesses[0].computed == CanonicalGrading{0, 6});
        CHECK(rep.witnesses[1].computed == CanonicalGrading{-1, 5});
        CHECK(rep.witnesses[1].computed == rep.witnesses[1].derived);
    }
}

TEST_CASE("forced unstable chain") {
    // tau = -1 companion; (3,2) has w - 1 = vx = 2
    auto neg = verdict("trefoil_lh", 3, 2, 0, true);
    CHECK(neg.t == -2);
    CHECK(neg.witnesses[1].element == "g2|mu1");
    CHECK(neg.witnesses[1].computed == CanonicalGrading{1, 2});
    CHECK(neg.witnesses[1].closed_form == CanonicalGrading{1, 2});
    auto pos = verdict("trefoil_lh", 3, 2, -3, true);
    CHECK(pos.t == 1);
    CHECK(pos.witnesses[1].computed == CanonicalGrading{2, 5});
    CHECK(pos.witnesses[1].derived == CanonicalGrading{2, 5});
    CHECK(pos.witnesses[1].closed_form == CanonicalGrading{2, 4});
}

TEST_CASE("unknot has no witnesses") {
    try {
        verdict("unknot", 3, 2, 0);
        FAIL("expected a domain error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Domain);
    }
}

TEST_CASE("report JSON is stable") {
    auto j1 = dump(witness_json(verdict("figure_eight", 5, 3, 0)));
    auto j2 = dump(witness_json(verdict("figure_eight", 5, 3, 0)));
    CHECK(j1 == j2);
    CHECK(j1.rfind("{\n  \"companion\": \"figure_eight\",\n  \"p\": 5,", 0) == 0);
    CHECK(j1.find("\"verdict\": \"not-thin\"") != std::string::npos);
}
