#include <doctest.h>

#include <functional>
#include <random>

#include "nakhom/kupisch.hpp"

using namespace nakhom;

namespace {

const KupischSeries A5 = family_A(5);
const KupischSeries C23 = validate_kupisch({2, 3}, Orientation::Cyclic);
const KupischSeries C45 = validate_kupisch({4, 5}, Orientation::Cyclic);

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

/* Seeded random valid series, for the property checks below. */
KupischSeries random_series(std::mt19937_64& rng, int max_n, int max_c) {
    if ((rng() & 1) != 0) {
        const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
        std::vector<int> c(static_cast<size_t>(n), 1);
        for (int i = n - 2; i >= 0; --i)
            c[i] = 2 + static_cast<int>(rng() % static_cast<unsigned>(
                                            std::min(max_c, c[i + 1] + 1) - 1));
        return validate_kupisch(c, Orientation::Linear);
    }
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
    std::vector<int> c(static_cast<size_t>(n));
    for (auto& x : c) x = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_c - 1));
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < n; ++i)
            if (c[i] > c[(i + 1) % n] + 1) {
                c[i] = c[(i + 1) % n] + 1;
                changed = true;
            }
    }
    return validate_kupisch(c, Orientation::Cyclic);
}

}  // namespace

TEST_CASE("series validation accepts and rejects per the rules") {
    CHECK(A5.n() == 5);
    CHECK(A5.c() == std::vector<int>{3, 3, 3, 2, 1});
    CHECK(code_of([] { validate_kupisch({1}, Orientation::Linear); }) == "Semisimple");
    CHECK(code_of([] { validate_kupisch({3, 1, 2}, Orientation::Linear); }) == "SlopeViolation");
    CHECK(code_of([] { validate_kupisch({}, Orientation::Linear); }) == "EmptySeries");
    CHECK(code_of([] { validate_kupisch({3, 0, 1}, Orientation::Linear); }) ==
          "NonPositiveEntry");
    CHECK(code_of([] { validate_kupisch({2, 2}, Orientation::Linear); }) ==
          "LinearTailViolation");
    CHECK(code_of([] { validate_kupisch({2, 1, 1}, Orientation::Linear); }) == "Disconnected");
    CHECK(code_of([] { validate_kupisch({1}, Orientation::Cyclic); }) == "Semisimple");
    CHECK(code_of([] { validate_kupisch({2, 1}, Orientation::Cyclic); }) == "Disconnected");
    CHECK(code_of([] { validate_kupisch({5, 3}, Orientation::Cyclic); }) == "SlopeViolation");
    CHECK(validate_kupisch({4}, Orientation::Cyclic).n() == 1);  // K[x]/(x^4)
}

TEST_CASE("series text form round-trips") {
    CHECK(parse_kupisch("linear:3,3,3,2,1") == A5);
    CHECK(parse_kupisch("cyclic:2,3") == C23);
    CHECK(A5.str() == "linear:3,3,3,2,1");
    CHECK(code_of([] { parse_kupisch("ring:2,3"); }) == "ParseError");
    CHECK(code_of([] { parse_kupisch("linear:3,x,1"); }) == "ParseError");
    CHECK(IntervalModule::parse("M(2,3)") == IntervalModule{2, 3});
    CHECK(code_of([] { IntervalModule::parse("M[2,3]"); }) == "ParseError");
}

TEST_CASE("CoKupisch series") {
    CHECK(A5.d() == std::vector<int>{1, 2, 3, 3, 3});
    CHECK(C23.d() == std::vector<int>{2, 3});
    CHECK(validate_kupisch({2, 2}, Orientation::Cyclic).d() == std::vector<int>{2, 2});

    // d is a permutation of c on random series
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        const KupischSeries K = random_series(rng, 7, 7);
        std::vector<int> cs = K.c(), ds = K.d();
        std::sort(cs.begin(), cs.end());
        std::sort(ds.begin(), ds.end());
        CHECK(cs == ds);
    }
}

TEST_CASE("distinguished modules at a vertex") {
    CHECK(simple_at(A5, 2) == IntervalModule{2, 1});
    CHECK(projective_at(A5, 0) == IntervalModule{0, 3});
    CHECK(injective_at(A5, 2) == IntervalModule{0, 3});
    CHECK(injective_at(A5, 0) == IntervalModule{0, 1});
    CHECK(code_of([] { injective_at(A5, 5); }) == "VertexOutOfRange");
    CHECK(code_of([] { simple_at(A5, -1); }) == "VertexOutOfRange");
}

TEST_CASE("socle and top vertices") {
    CHECK(socle_vertex(A5, {3, 2}) == 4);
    CHECK(top_vertex(A5, {3, 2}) == 3);
    CHECK(socle_vertex(C23, {1, 3}) == 1);  // 3 mod 2
}

TEST_CASE("projectivity and injectivity of intervals") {
    CHECK(is_injective(A5, {0, 2}));
    CHECK_FALSE(is_injective(A5, {1, 2}));
    CHECK(is_injective(C23, {1, 3}));
    CHECK(is_projective(C23, {1, 3}));

    // the uniform socle-length test agrees with the classical c_{i-1} <= k
    // test at every cyclic vertex and every interior linear vertex
    for (const KupischSeries& K : enumerate_series(6, 6)) {
        for (int i = 0; i < K.n(); ++i) {
            if (!K.cyclic() && i == 0) continue;
            for (int k = 1; k <= K.c()[i]; ++k)
                CHECK(is_injective(K, {i, k}) ==
                      (K.c_at(static_cast<long>(i) - 1) <= k));
        }
    }
}

TEST_CASE("hulls, cosyzygies, covers, syzygies") {
    CHECK(cosyzygy(A5, {3, 2}) == IntervalModule{2, 1});
    CHECK_FALSE(cosyzygy(A5, {0, 1}).has_value());
    CHECK(injective_hull(A5, {4, 1}) == IntervalModule{2, 3});
    CHECK(syzygy(A5, {0, 1}) == IntervalModule{1, 2});
    CHECK_FALSE(syzygy(A5, {0, 3}).has_value());
    CHECK(syzygy(C23, {1, 1}) == IntervalModule{0, 2});
    CHECK(projective_cover(C23, {1, 1}) == IntervalModule{1, 3});

    // exactness by dimension count, and the zero boundary cases
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        const KupischSeries K = random_series(rng, 7, 7);
        for (int i = 0; i < K.n(); ++i)
            for (int k = 1; k <= K.c()[i]; ++k) {
                const IntervalModule M{i, k};
                const auto co = cosyzygy(K, M);
                CHECK(injective_hull(K, M).length == M.length + (co ? co->length : 0));
                const auto sy = syzygy(K, M);
                CHECK(projective_cover(K, M).length == M.length + (sy ? sy->length : 0));
                CHECK(is_injective(K, M) == !co.has_value());
                CHECK(is_projective(K, M) == !sy.has_value());
            }
    }
}

TEST_CASE("hom dimensions by shift windows") {
    CHECK(hom_dim(A5, {2, 3}, {0, 3}) == 1);
    CHECK(hom_dim(A5, {0, 3}, {2, 3}) == 0);
    CHECK(hom_dim(C23, {1, 3}, {1, 3}) == 2);

    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
        const KupischSeries K = random_series(rng, 6, 6);
        for (int i = 0; i < K.n(); ++i)
            for (int k = 1; k <= K.c()[i]; ++k)
                CHECK(hom_dim(K, {i, k}, {i, k}) >= 1);  // the identity
    }
}

TEST_CASE("minimal injective resolution of e_3 A over the 5-point family") {
    const ResolutionReport rep = min_injective_resolution(A5, ModuleList({{3, 2}}));
    REQUIRE(rep.steps.size() == 3);
    CHECK(rep.steps[0].term == ModuleList({{2, 3}}));
    CHECK(rep.steps[1].term == ModuleList({{0, 3}}));
    CHECK(rep.steps[2].term == ModuleList({{0, 2}}));
    CHECK(rep.length == ExtNat::finite(2));
    CHECK(rep.dominant_prefix == ExtNat::finite(2));
}

TEST_CASE("resolutions terminate or detect cycles exactly") {
    // injectives resolve in one step
    CHECK(min_injective_resolution(A5, ModuleList({{0, 2}})).length == ExtNat::finite(0));

    // over cyclic [4,5] the Gorenstein dimension is 2, so projectives have
    // finite injective resolutions, while the simple S_0 cycles
    CHECK(injdim(C45, {0, 4}) == ExtNat::finite(2));
    const ResolutionReport s0 = min_injective_resolution(C45, ModuleList({{0, 1}}));
    CHECK(s0.length == ExtNat::infinity());
    CHECK(s0.cycle_detected);
    CHECK(projdim(C45, {0, 1}) == ExtNat::infinity());

    // raising the cap never changes a cycle verdict
    const long cap = default_step_cap(C45);
    CHECK(min_injective_resolution(C45, ModuleList({{0, 1}}), 10 * cap).length ==
          ExtNat::infinity());

    // a cap below the state-space bound is a configuration error
    CHECK(code_of([&] { min_injective_resolution(C45, ModuleList({{0, 1}}), 2); }) ==
          "StepCapExceeded");
}

TEST_CASE("module and algebra dimensions") {
    CHECK(domdim_module(C23, {0, 2}) == ExtNat::finite(2));
    CHECK(injdim(A5, {4, 1}) == ExtNat::finite(3));
    CHECK(domdim_module(C23, {1, 3}) == ExtNat::infinity());  // projective-injective

    CHECK(domdim_algebra(A5) == ExtNat::finite(2));
    CHECK(gldim(A5) == ExtNat::finite(3));
    CHECK(domdim_algebra(validate_kupisch({2, 2}, Orientation::Cyclic)) == ExtNat::infinity());

    const GorensteinReport g = gorenstein(C45);
    CHECK(g.gdim == ExtNat::finite(2));
    CHECK_FALSE(g.asymmetry);
    CHECK(gldim(C45) == ExtNat::infinity());
}

TEST_CASE("Gorenstein symmetry never breaks") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 80; ++t) {
        const KupischSeries K = random_series(rng, 6, 6);
        CHECK_FALSE(gorenstein(K).asymmetry);
    }
}

TEST_CASE("minimal faithful projective-injective vertices") {
    CHECK(minimal_faithful_vertices(A5) == std::set<int>{0, 1, 2});
    CHECK(minimal_faithful_vertices(C23) == std::set<int>{1});
    CHECK(minimal_faithful_vertices(validate_kupisch({2, 2}, Orientation::Cyclic)) ==
          std::set<int>{0, 1});
}

TEST_CASE("canonical tilting modules") {
    const KupischSeries A4 = family_A(4);
    CHECK(canonical_tilting(A4, 1) == ModuleList({{0, 3}, {1, 3}, {1, 2}, {1, 1}}));
    CHECK(canonical_tilting(A5, 2) == ModuleList({{0, 3}, {1, 3}, {2, 3}, {0, 2}, {1, 1}}));

    const KupischSeries A6 = family_A(6);
    ModuleList injectives;
    for (int i = 0; i < 6; ++i) injectives.add(injective_at(A6, i));
    CHECK(canonical_tilting(A6, 3) == injectives.basic());

    CHECK(code_of([&] { canonical_tilting(A5, 3); }) == "IndexExceedsDomdim");
    CHECK(code_of([&] { canonical_tilting(A5, 0); }) == "IndexExceedsDomdim");
    CHECK(code_of([] {
              canonical_tilting(validate_kupisch({2, 2}, Orientation::Cyclic), 1);
          }) == "InfiniteDomdim");
}

TEST_CASE("the linear family") {
    CHECK(family_A(5).c() == std::vector<int>{3, 3, 3, 2, 1});
    CHECK(family_A(6).c() == std::vector<int>{3, 3, 3, 3, 2, 1});
    CHECK(family_A(3).c() == std::vector<int>{3, 2, 1});
    CHECK(family_A(2).c() == std::vector<int>{2, 1});  // degenerate but valid
    CHECK(code_of([] { family_A(1); }) == "InvalidFamilyIndex");
}

TEST_CASE("opposite algebra") {
    CHECK(opposite(A5).series == A5);  // the family is self-opposite
    const OppositeResult op23 = opposite(C23);
    CHECK(op23.series.c() == std::vector<int>{2, 3});

    std::mt19937_64 rng(19);
    for (int t = 0; t < 50; ++t) {
        const KupischSeries K = random_series(rng, 7, 7);
        const OppositeResult op = opposite(K);
        CHECK(domdim_algebra(op.series) == domdim_algebra(K));
        CHECK(gldim(op.series) == gldim(K));
        // double opposite restores the series up to the identity relabeling
        const OppositeResult opop = opposite(op.series);
        CHECK(opop.series == K);
    }
}

TEST_CASE("resolution is additive over direct sums") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        const KupischSeries K = random_series(rng, 6, 6);
        ModuleList L;
        const int pieces = 1 + static_cast<int>(rng() % 3);
        for (int p = 0; p < pieces; ++p) {
            const int i = static_cast<int>(rng() % static_cast<unsigned>(K.n()));
            const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(K.c()[i]));
            L.add(IntervalModule{i, k});
        }
        const ResolutionReport whole = min_injective_resolution(K, L);
        std::vector<ExtNat> lengths, prefixes;
        for (const auto& m : L.entries) {
            const ResolutionReport one = min_injective_resolution(K, ModuleList({m}));
            lengths.push_back(one.length);
            prefixes.push_back(one.dominant_prefix);
        }
        CHECK(whole.length == ExtNat::max_of(lengths));
        CHECK(whole.dominant_prefix == ExtNat::min_of(prefixes));
        // step 0 terms are the hulls of the summands
        ModuleList hulls;
        for (const auto& m : L.entries) hulls.add(injective_hull(K, m));
        CHECK(whole.steps.at(0).term == hulls);
    }
}

TEST_CASE("module list plumbing") {
    ModuleList L({{1, 2}, {0, 3}, {1, 2}});
    CHECK(L.entries.front() == IntervalModule{0, 3});  // canonical order
    bool dropped = false;
    CHECK(L.basic(&dropped).size() == 2);
    CHECK(dropped);
    CHECK(L.total_length() == 7);
    CHECK(ModuleList().str() == "0");
    CHECK(code_of([&] { check_module_list(A5, ModuleList({{0, 4}})); }) == "InvalidInterval");
}
