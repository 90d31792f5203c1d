#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "tropmirror/tropical.hpp"

using namespace tropmirror;

namespace {

QVec qvec(std::vector<long long> v) {
    QVec r;
    for (long long x : v) r.push_back(Rational(x));
    return r;
}

std::vector<std::vector<ExponentVector>> cell_alpha_sets(const WeightedPointSet& w,
                                                         const RegularSubdivision& s) {
    std::vector<std::vector<ExponentVector>> out;
    for (const auto& c : s.cells) {
        std::vector<ExponentVector> as;
        for (int i : c.points) as.push_back(w.alpha(i));
        std::sort(as.begin(), as.end());
        out.push_back(as);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("pair of pants subdivision: one cell, everything in a_red") {
    WeightedPointSet w = fixtures::pants_points(2);
    RegularSubdivision s = lower_hull_subdivision(w);
    REQUIRE(s.cells.size() == 1);
    CHECK(s.cells[0].points.size() == 3);
    CHECK(s.a_red.size() == 3);
    CHECK(!s.degenerate);
    CHECK(is_maximal(w, s).maximal);
}

TEST_CASE("1-d lower hull by hand: A={0,1,2}, rho=(0,0,1)") {
    WeightedPointSet w;
    w.n = 1;
    w.points = {{{0}, Rational(0)}, {{1}, Rational(0)}, {{2}, Rational(1)}};
    RegularSubdivision s = lower_hull_subdivision(w);
    auto cells = cell_alpha_sets(w, s);
    REQUIRE(cells.size() == 2);
    CHECK(cells[0] == std::vector<ExponentVector>{{0}, {1}});
    CHECK(cells[1] == std::vector<ExponentVector>{{1}, {2}});
    CHECK(s.a_red.size() == 3);
    // Breakpoints of the PL function: Pi_0 = two points
    TropicalComplex tc = build_tropical_complex(w, s);
    CHECK(tc.cells_by_dim[0].size() == 2);
    CHECK(tc.components.size() == 3);
}

TEST_CASE("non-unimodular segment: A={0,2}") {
    WeightedPointSet w;
    w.n = 1;
    w.points = {{{0}, Rational(0)}, {{2}, Rational(0)}};
    RegularSubdivision s = lower_hull_subdivision(w);
    REQUIRE(s.cells.size() == 1);
    CHECK(s.cells[0].points.size() == 2);
    MaximalityCertificate cert = is_maximal(w, s);
    CHECK(!cert.maximal);
    CHECK(cert.failing_cell == 0);
    CHECK(cert.reason.find("2") != std::string::npos);
}

TEST_CASE("genus-2 datum reproduces the 12-triangle subdivision") {
    WeightedPointSet w = fixtures::genus2_points();
    RegularSubdivision s = lower_hull_subdivision(w);
    REQUIRE(s.cells.size() == 12);
    CHECK(s.a_red.size() == 12);
    CHECK(is_maximal(w, s).maximal);
    // Every unit square is split along its antidiagonal.
    std::vector<std::vector<ExponentVector>> expect;
    for (long long a = 0; a < 3; ++a)
        for (long long b = 0; b < 2; ++b) {
            std::vector<ExponentVector> lower{{a, b}, {a + 1, b}, {a, b + 1}};
            std::vector<ExponentVector> upper{{a + 1, b}, {a, b + 1}, {a + 1, b + 1}};
            std::sort(lower.begin(), lower.end());
            std::sort(upper.begin(), upper.end());
            expect.push_back(lower);
            expect.push_back(upper);
        }
    std::sort(expect.begin(), expect.end());
    CHECK(cell_alpha_sets(w, s) == expect);
}

TEST_CASE("genus-2 tropical curve: counts and genus") {
    WeightedPointSet w = fixtures::genus2_points();
    RegularSubdivision s = lower_hull_subdivision(w);
    TropicalComplex tc = build_tropical_complex(w, s);
    REQUIRE(tc.components.size() == 12);
    int bounded = 0;
    for (const auto& c : tc.components) bounded += c.bounded ? 1 : 0;
    CHECK(bounded == 2);  // the interior weights (1,1) and (2,1)
    TropicalCurveGraph g = curve_graph(w, s, tc);
    CHECK(g.vertices.size() == 12);
    int eb = 0, rays = 0;
    for (const auto& e : g.edges) (e.bounded ? eb : rays)++;
    CHECK(eb == 13);  // 3*12 = 2*E_b + rays with 10 rays (Euler count)
    CHECK(rays == 10);
    CHECK(g.genus == 2);
    CHECK(g.components == 1);
}

TEST_CASE("tropical_value") {
    SUBCASE("pair of pants") {
        WeightedPointSet w = fixtures::pants_points(2);
        auto [v1, a1] = tropical_value(w, qvec({-1, -1}));
        CHECK(v1 == 0);
        REQUIRE(a1.size() == 1);
        CHECK(w.alpha(a1[0]) == ExponentVector{0, 0});
        auto [v2, a2] = tropical_value(w, qvec({0, 0}));
        CHECK(v2 == 0);
        CHECK(a2.size() == 3);  // the trivalent vertex of Pi_0
    }
    SUBCASE("genus-2 datum") {
        WeightedPointSet w = fixtures::genus2_points();
        // (0,0) lies on Pi_0: both interior weights have rho = 0.
        auto [v0, a0] = tropical_value(w, qvec({0, 0}));
        CHECK(v0 == 0);
        REQUIRE(a0.size() == 2);
        CHECK(w.alpha(a0[0]) == ExponentVector{1, 1});
        CHECK(w.alpha(a0[1]) == ExponentVector{2, 1});
        // A chamber-interior point: direct evaluation of all 12 forms.
        auto [v1, a1] = tropical_value(w, qvec({-1, 0}));
        CHECK(v1 == -1);
        REQUIRE(a1.size() == 1);
        CHECK(w.alpha(a1[0]) == ExponentVector{1, 1});
    }
}

TEST_CASE("argmax ties happen exactly on Pi_0") {
    // Cross-check on random rational points: |argmax| >= 2 iff the point
    // fails every component's strict-interior test.
    WeightedPointSet w = fixtures::genus2_points();
    RegularSubdivision s = lower_hull_subdivision(w);
    TropicalComplex tc = build_tropical_complex(w, s);
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 8);
    for (int iter = 0; iter < 120; ++iter) {
        QVec xi{Rational(num(rng)) / den(rng), Rational(num(rng)) / den(rng)};
        auto [val, argmax] = tropical_value(w, xi);
        (void)val;
        bool strict_inside_some = false;
        for (const auto& comp : tc.components) {
            bool strict = true;
            for (const auto& h : comp.inequalities) {
                Rational v = h.offset;
                for (int j = 0; j < w.n; ++j) v += h.normal[j] * xi[j];
                if (v <= 0) strict = false;
            }
            if (strict) strict_inside_some = true;
        }
        CHECK(strict_inside_some == (argmax.size() == 1));
    }
}

TEST_CASE("cell functionals minorize rho, tight exactly on the cell") {
    for (const WeightedPointSet& w :
         {fixtures::genus2_points(), fixtures::pants_points(3), fixtures::ale_points(2, true),
          fixtures::fermat_points(), fixtures::bidegree_points(2, 2)})
    {
        RegularSubdivision s = lower_hull_subdivision(w);
        for (const auto& cell : s.cells) {
            for (int i = 0; i < static_cast<int>(w.points.size()); ++i) {
                Rational g = cell.offset;
                for (int j = 0; j < w.n; ++j) g += cell.slope[j] * Rational(w.alpha(i)[j]);
                bool in_cell =
                    std::find(cell.points.begin(), cell.points.end(), i) != cell.points.end();
                if (in_cell) CHECK(g == w.rho(i));
                else CHECK(g < w.rho(i));
            }
        }
    }
}

TEST_CASE("duality counts") {
    for (const WeightedPointSet& w :
         {fixtures::genus2_points(), fixtures::fermat_points(), fixtures::bidegree_points(3, 2)})
    {
        RegularSubdivision s = lower_hull_subdivision(w);
        TropicalComplex tc = build_tropical_complex(w, s);
        CHECK(tc.components.size() == s.a_red.size());
        // 1-cells of Pi_0 = edges of P; 0-cells = maximal cells.
        std::vector<PFace> faces = subdivision_faces(w, s);
        size_t p_edges = 0;
        for (const auto& f : faces) p_edges += f.dim == 1 ? 1 : 0;
        CHECK(tc.cells_by_dim[1].size() == p_edges);
        CHECK(tc.cells_by_dim[0].size() == s.cells.size());
    }
}

TEST_CASE("trivalence and genus for maximal bidegree data") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
        WeightedPointSet w = fixtures::bidegree_points(p, q);
        RegularSubdivision s = lower_hull_subdivision(w);
        REQUIRE(is_maximal(w, s).maximal);
        TropicalComplex tc = build_tropical_complex(w, s);
        TropicalCurveGraph g = curve_graph(w, s, tc);
        int eb = 0, rays = 0;
        for (const auto& e : g.edges) (e.bounded ? eb : rays)++;
        CHECK(3 * static_cast<int>(g.vertices.size()) == 2 * eb + rays);
        CHECK(g.genus == (p - 1) * (q - 1));
        CHECK(g.genus == eb - static_cast<int>(g.vertices.size()) + 1);
    }
}

TEST_CASE("degenerate input is flagged, not rejected") {
    WeightedPointSet w;
    w.n = 2;
    w.points = {{{0, 0}, Rational(0)}, {{1, 1}, Rational(0)}, {{2, 2}, Rational(1)}};
    RegularSubdivision s = lower_hull_subdivision(w);
    CHECK(s.degenerate);
    CHECK(s.hull_dim == 1);
    CHECK(s.cells.size() == 2);
    TropicalComplex tc = build_tropical_complex(w, s);
    CHECK(tc.cells_by_dim[0].empty());
    CHECK(tc.cells_by_dim[1].size() == 2);  // two parallel lines
    CHECK(tc.components.size() == 3);
    CHECK_THROWS_AS(curve_graph(w, s, tc), Error);

    WeightedPointSet single;
    single.n = 2;
    single.points = {{{1, 1}, Rational(0)}};
    RegularSubdivision s1 = lower_hull_subdivision(single);
    CHECK(s1.degenerate);
    CHECK(s1.cells.size() == 1);
    CHECK(s1.a_red == std::vector<int>{0});
}

TEST_CASE("validation rejects duplicates and dimension mismatches") {
    WeightedPointSet w;
    w.n = 2;
    w.points = {{{0, 0}, Rational(0)}, {{0, 0}, Rational(1)}};
    CHECK_THROWS_AS(lower_hull_subdivision(w), Error);
    WeightedPointSet w2;
    w2.n = 2;
    w2.points = {{{0, 0, 0}, Rational(0)}};
    CHECK_THROWS_AS(lower_hull_subdivision(w2), Error);
}
