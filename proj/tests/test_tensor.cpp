#include <catch2/catch_amalgamated.hpp>

#include <beltrami/catalog.hpp>
#include <beltrami/tensor.hpp>

#include <cmath>
#include <random>
#include <sstream>

#include "testutil.hpp"

using namespace beltrami;

namespace {

// Random trigonometric polynomial: smooth and bounded on the whole plane.
Expr random_trig_field(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    const char* basis[] = {"1",      "sin(u)", "cos(u)",        "sin(v)",
                           "cos(v)", "sin(u)*cos(v)", "cos(u)*sin(v)", "cos(u)*cos(v)"};
    std::ostringstream out;
    out.precision(17);
    for (int t = 0; t < 5; ++t) {
        if (t) out << "+";
        out << "(" << coef(gen) << ")*" << basis[gen() % 8];
    }
    return parse(out.str());
}

}  // namespace

TEST_CASE("inverse forms") {
    SECTION("unit sphere equator, form I") {
        const Frame fr = compute_frame(make_immersion(catalog::unit_sphere()), M_PI / 2, 0.0);
        const Sym2 inv = inverse_form(fr, Form::I);
        CHECK(inv.a11 == Catch::Approx(1.0).margin(1e-12));
        CHECK(inv.a12 == Catch::Approx(0.0).margin(1e-12));
        CHECK(inv.a22 == Catch::Approx(1.0).margin(1e-12));
    }
    SECTION("unit sphere at pi/3, form III") {
        const Frame fr = compute_frame(make_immersion(catalog::unit_sphere()), M_PI / 3, 0.0);
        const Sym2 inv = inverse_form(fr, Form::III);
        CHECK(inv.a11 == Catch::Approx(1.0).margin(1e-11));
        CHECK(inv.a22 == Catch::Approx(4.0 / 3.0).margin(1e-11));
    }
    SECTION("torus form II inverse multiplies back to identity") {
        const Frame fr = compute_frame(make_immersion(catalog::torus()), 0.0, 0.0);
        const Sym2 inv = inverse_form(fr, Form::II);
        const double p11 = inv.a11 * fr.bv.a11 + inv.a12 * fr.bv.a12;
        const double p12 = inv.a11 * fr.bv.a12 + inv.a12 * fr.bv.a22;
        const double p22 = inv.a12 * fr.bv.a12 + inv.a22 * fr.bv.a22;
        CHECK(p11 == Catch::Approx(1.0).margin(1e-12));
        CHECK(p12 == Catch::Approx(0.0).margin(1e-12));
        CHECK(p22 == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("christoffel symbols coincide for identical forms") {
    // e = g on the unit sphere, so the symbols of I and III are equal.
    const Immersion s = make_immersion(catalog::unit_sphere());
    for (double u : {0.6, 1.1, 2.2}) {
        const Frame fr = compute_frame(s, u, 0.8);
        const Christoffel ci = christoffel(fr, Form::I);
        const Christoffel ce = christoffel(fr, Form::III);
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    CHECK(ci.s[k][i][j] == Catch::Approx(ce.s[k][i][j]).margin(1e-10));
                    CHECK(ci.s[k][i][j] == Catch::Approx(ci.s[k][j][i]).margin(1e-14));
                }
    }
}

TEST_CASE("difference tensors") {
    SECTION("all three forms proportional on the unit sphere: T = T~ = 0") {
        const Frame fr = compute_frame(make_immersion(catalog::unit_sphere()), 1.0, 0.5);
        const DifferenceTensors dt = difference_tensors(fr);
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    CHECK(std::abs(dt.T[k][i][j]) < 1e-10);
                    CHECK(std::abs(dt.Ttilde[k][i][j]) < 1e-10);
                }
    }
    SECTION("catenoid: T + T~ vanishes componentwise") {
        const DifferenceTensors dt =
            difference_tensors(make_immersion(catalog::catenoid()), 0.5, 0.0);
        CHECK(dt.eq11_residual < 1e-9);
    }
    SECTION("torus: covariant-derivative expressions match") {
        const DifferenceTensors dt =
            difference_tensors(make_immersion(catalog::torus()), 0.3, 0.0);
        CHECK(dt.eq9_residual < 1e-8);
        CHECK(dt.eq10_residual < 1e-8);
        CHECK(dt.eq11_residual < 1e-8);
    }
}

TEST_CASE("first differential parameter") {
    auto gen = testutil::rng(55);
    const Immersion torus = make_immersion(catalog::torus());
    const Immersion cat = make_immersion(catalog::catenoid());

    SECTION("positive definite forms give nonnegative energy") {
        std::uniform_real_distribution<double> pu(-1.0, 1.0), pv(0.3, 6.0);
        for (int rep = 0; rep < 25; ++rep) {
            const Expr f = random_trig_field(gen);
            for (const Immersion* s : {&torus, &cat}) {
                const Frame fr = compute_frame(*s, pu(gen), pv(gen));
                const Jet fj = eval_jet(f, fr.ju, fr.jv);
                CHECK(nabla1(fr, Form::I, fj, fj) >= -1e-14);
                CHECK(nabla1(fr, Form::III, fj, fj) >= -1e-14);
            }
        }
    }
    SECTION("cross-form gradient identities at sample points") {
        const Expr f = parse("sin(u)*cos(v)+0.3*u");
        for (double u : {-0.8, 0.1, 0.9}) {
            const Frame fr = compute_frame(torus, u, 1.7);
            const Jet fj = eval_jet(f, fr.ju, fr.jv);
            const Vec3 r1 = nabla1(fr, Form::I, fj, fr.X) + nabla1(fr, Form::II, fj, fr.N);
            const Vec3 r2 = nabla1(fr, Form::II, fj, fr.X) + nabla1(fr, Form::III, fj, fr.N);
            CHECK(r1.norm() < 1e-9);
            CHECK(r2.norm() < 1e-9);
        }
    }
}

TEST_CASE("laplacian basics") {
    const Immersion sphere = make_immersion(catalog::unit_sphere());
    const Immersion torus = make_immersion(catalog::torus());
    const Immersion cat = make_immersion(catalog::catenoid());

    SECTION("constants are annihilated by every form's operator") {
        for (const Immersion* s : {&sphere, &torus, &cat}) {
            const Frame fr = compute_frame(*s, 0.7, 1.1);
            const Jet c = Jet::constant(4.25, fr.order);
            for (Form f : {Form::I, Form::II, Form::III})
                CHECK(std::abs(laplacian(fr, f, c)) < 1e-14);
        }
    }
    SECTION("gauss map satisfies the third-form eigenvalue law") {
        for (const Immersion* s : {&sphere, &torus, &cat}) {
            const Frame fr = compute_frame(*s, 0.9, 2.3);
            const Vec3 ln = laplacian(fr, Form::III, fr.N);
            const Vec3 resid = ln - 2.0 * fr.normal();
            CHECK(resid.norm() < 1e-9);
        }
    }
    SECTION("position vector on the unit sphere") {
        const Frame fr = compute_frame(sphere, 1.2, 0.4);
        const Vec3 lx = laplacian(fr, Form::III, fr.X);
        CHECK((lx - 2.0 * fr.x()).norm() < 1e-10);
    }
}

TEST_CASE("operators of I and III coincide on the unit sphere") {
    const Immersion sphere = make_immersion(catalog::unit_sphere());
    auto gen = testutil::rng(2024);
    std::uniform_real_distribution<double> pu(0.5, M_PI - 0.5), pv(0.2, 6.0);
    for (int rep = 0; rep < 50; ++rep) {
        const Expr f = random_trig_field(gen);
        const Frame fr = compute_frame(sphere, pu(gen), pv(gen));
        const Jet fj = eval_jet(f, fr.ju, fr.jv);
        const double a = laplacian(fr, Form::I, fj);
        const double b = laplacian(fr, Form::III, fj);
        REQUIRE(std::abs(a - b) < 1e-9 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("R gradient identity over grids") {
    GridSpec grid;
    grid.rows = grid.cols = 16;
    SECTION("unit sphere: both sides vanish") {
        const Report rep = verify_R_gradient(make_immersion(catalog::unit_sphere()), grid, 1e-9);
        CHECK(rep.pass());
        CHECK(rep.residual_max < 1e-9);
    }
    SECTION("torus patch") {
        const Report rep = verify_R_gradient(make_immersion(catalog::torus()), grid, 1e-7);
        CHECK(rep.pass());
    }
    SECTION("catenoid: R identically zero") {
        const Report rep = verify_R_gradient(make_immersion(catalog::catenoid()), grid, 1e-8);
        CHECK(rep.pass());
    }
}

TEST_CASE("contraction identity ties the R gradient to form I") {
    for (const auto& spec : {catalog::torus(), catalog::catenoid()}) {
        const Immersion s = make_immersion(spec);
        for (const auto& [u, v] : grid_points(s.domain, GridSpec{8, 8, 0.05, false})) {
            const auto [lhs, rhs] = eq14_sides(compute_frame(s, u, v));
            REQUIRE((lhs - rhs).norm() < 1e-7 * std::max(1.0, rhs.norm()));
        }
    }
}

TEST_CASE("third-form vector laplacian magnitude is orientation invariant") {
    for (const auto& spec : {catalog::unit_sphere(), catalog::catenoid(), catalog::torus()}) {
        const Immersion s = make_immersion(spec);
        const Immersion sw = swap_parameters(s);
        const Frame a = compute_frame(s, 0.75, 1.1);
        const Frame b = compute_frame(sw, 1.1, 0.75);
        const Vec3 la = laplacian(a, Form::III, a.X);
        const Vec3 lb = laplacian(b, Form::III, b.X);
        CHECK(la.norm() == Catch::Approx(lb.norm()).margin(1e-9));
    }
}
