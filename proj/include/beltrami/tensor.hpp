#pragma once

#include <beltrami/report.hpp>
#include <beltrami/surface.hpp>

#include <cmath>
#include <functional>

namespace beltrami {

enum class Form { I, II, III };

inline const char* form_name(Form f) {
    switch (f) {
        case Form::I: return "I";
        case Form::II: return "II";
        default: return "III";
    }
}

inline const Sym2j& form_jets(const Frame& fr, Form f) {
    switch (f) {
        case Form::I: return fr.g;
        case Form::II: return fr.b;
        default: return fr.e;
    }
}

inline Sym2 form_matrix(const Frame& fr, Form f) {
    switch (f) {
        case Form::I: return fr.gv;
        case Form::II: return fr.bv;
        default: return fr.ev;
    }
}

/// Inverse tensor d^{ij} of the selected fundamental form at the frame point.
inline Sym2 inverse_form(const Frame& fr, Form f) { return form_matrix(fr, f).inverse(); }

/// Second-kind Christoffel symbols s[k][i][j], symmetric in (i,j), computed
/// from the selected form's component derivatives.
struct Christoffel {
    double s[2][2][2] = {};
    Form form = Form::I;
};

inline Christoffel christoffel(const Frame& fr, Form f) {
    const Sym2j& d = form_jets(fr, f);
    const Sym2 inv = inverse_form(fr, f);
    Christoffel ch;
    ch.form = f;
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = i; j < 2; ++j) {
                double acc = 0.0;
                for (int m = 0; m < 2; ++m)
                    acc += inv.at(k, m) *
                           (d.dcomp(j, m, i) + d.dcomp(i, m, j) - d.dcomp(i, j, m));
                ch.s[k][i][j] = ch.s[k][j][i] = 0.5 * acc;
            }
    return ch;
}

/// Covariant derivative of the second form, (grad_m b)_{ij}, with respect to
/// the Christoffel symbols `ch` of whichever form was chosen.
inline double covariant_db(const Frame& fr, const Christoffel& ch, int m, int i, int j) {
    double r = fr.b.dcomp(i, j, m);
    for (int s = 0; s < 2; ++s)
        r -= ch.s[s][m][i] * fr.bv.at(s, j) + ch.s[s][m][j] * fr.bv.at(i, s);
    return r;
}

/// First differential parameter: d^{ij} f_{,i} g_{,j} under the chosen form.
inline double nabla1(const Frame& fr, Form f, const Jet& a, const Jet& b) {
    const Sym2 inv = inverse_form(fr, f);
    const double a1 = a.partial(1, 0), a2 = a.partial(0, 1);
    const double b1 = b.partial(1, 0), b2 = b.partial(0, 1);
    return inv.a11 * a1 * b1 + inv.a12 * (a1 * b2 + a2 * b1) + inv.a22 * a2 * b2;
}

inline Vec3 nabla1(const Frame& fr, Form f, const Jet& a, const JetVec3& G) {
    return {nabla1(fr, f, a, G.x), nabla1(fr, f, a, G.y), nabla1(fr, f, a, G.z)};
}

/// Second Laplace operator of the chosen form: -d^{ij}(f_{,ij} - C^m_{ij} f_{,m}).
inline double laplacian(const Frame& fr, Form f, const Jet& field) {
    if (field.order() < 2)
        throw OrderExceeded("laplacian needs a field jet of order >= 2");
    const Sym2 inv = inverse_form(fr, f);
    const Christoffel ch = christoffel(fr, f);
    const double f1[2] = {field.partial(1, 0), field.partial(0, 1)};
    const double f2[2][2] = {{field.partial(2, 0), field.partial(1, 1)},
                             {field.partial(1, 1), field.partial(0, 2)}};
    double acc = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double hess = f2[i][j];
            for (int m = 0; m < 2; ++m) hess -= ch.s[m][i][j] * f1[m];
            acc += inv.at(i, j) * hess;
        }
    return -acc;
}

/// Componentwise vector Laplacian in ambient Cartesian coordinates.
inline Vec3 laplacian(const Frame& fr, Form f, const JetVec3& field) {
    return {laplacian(fr, f, field.x), laplacian(fr, f, field.y), laplacian(fr, f, field.z)};
}

/// Scalar fields are evaluated against a frame so that geometric quantities
/// (W, R, coordinates) and user expressions share one representation.
using ScalarField = std::function<Jet(const Frame&)>;
using VectorField = std::function<JetVec3(const Frame&)>;

inline ScalarField expr_field(const Expr& e) {
    return [e](const Frame& fr) { return eval_jet(e, fr.ju, fr.jv); };
}

inline ScalarField coordinate_field(int axis) {
    return [axis](const Frame& fr) {
        return axis == 0 ? fr.X.x : (axis == 1 ? fr.X.y : fr.X.z);
    };
}

inline ScalarField support_field() {
    return [](const Frame& fr) { return fr.W; };
}

inline ScalarField radii_sum_field() {
    return [](const Frame& fr) { return fr.R; };
}

/// Convenience overloads matching the per-point operation contracts.
inline double laplacian(const Immersion& s, Form f, const ScalarField& field, double u,
                        double v, int order = 5, const Floors& floors = {}) {
    const Frame fr = compute_frame(s, u, v, order, floors);
    return laplacian(fr, f, field(fr));
}

inline double nabla1(const Immersion& s, Form f, const ScalarField& a, const ScalarField& b,
                     double u, double v, int order = 5, const Floors& floors = {}) {
    const Frame fr = compute_frame(s, u, v, order, floors);
    return nabla1(fr, f, a(fr), b(fr));
}

/// Difference tensors between the Christoffel symbols of the three forms,
/// T = C(I) - C(II) and T~ = C(III) - C(II), together with the residuals of
/// their covariant-derivative expressions and of T + T~ = 0.
struct DifferenceTensors {
    double T[2][2][2] = {};
    double Ttilde[2][2][2] = {};
    double eq9_residual = 0;   // T vs -1/2 b^{km} (grad^I b)_{ij}
    double eq10_residual = 0;  // T~ vs -1/2 b^{km} (grad^III b)_{ij}
    double eq11_residual = 0;  // T + T~ componentwise
};

inline DifferenceTensors difference_tensors(const Frame& fr) {
    const Christoffel cg = christoffel(fr, Form::I);
    const Christoffel cb = christoffel(fr, Form::II);
    const Christoffel ce = christoffel(fr, Form::III);
    const Sym2 binv = inverse_form(fr, Form::II);

    DifferenceTensors dt;
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                dt.T[k][i][j] = cg.s[k][i][j] - cb.s[k][i][j];
                dt.Ttilde[k][i][j] = ce.s[k][i][j] - cb.s[k][i][j];

                double rhs_I = 0.0, rhs_III = 0.0;
                for (int m = 0; m < 2; ++m) {
                    rhs_I += binv.at(k, m) * covariant_db(fr, cg, m, i, j);
                    rhs_III += binv.at(k, m) * covariant_db(fr, ce, m, i, j);
                }
                dt.eq9_residual =
                    std::max(dt.eq9_residual, std::abs(dt.T[k][i][j] + 0.5 * rhs_I));
                dt.eq10_residual =
                    std::max(dt.eq10_residual, std::abs(dt.Ttilde[k][i][j] + 0.5 * rhs_III));
                dt.eq11_residual =
                    std::max(dt.eq11_residual, std::abs(dt.T[k][i][j] + dt.Ttilde[k][i][j]));
            }
    return dt;
}

inline DifferenceTensors difference_tensors(const Immersion& s, double u, double v,
                                            int order = 5, const Floors& floors = {}) {
    return difference_tensors(compute_frame(s, u, v, order, floors));
}

/// Residual of the gradient identity R_{,m} = e^{ik} (grad^III_m b)_{ik},
/// with the left side read off the R jet and the right side assembled from
/// covariant derivatives; the two routes share no code.
inline Report verify_R_gradient(const Immersion& s, const GridSpec& grid, double tol,
                                int order = 5, const Floors& floors = {}) {
    return sweep_grid("R-gradient", s.name, s.domain, grid, tol, [&](double u, double v) {
        const Frame fr = compute_frame(s, u, v, order, floors);
        const Christoffel ce = christoffel(fr, Form::III);
        const Sym2 einv = inverse_form(fr, Form::III);
        double worst = 0.0;
        for (int m = 0; m < 2; ++m) {
            const double lhs = m == 0 ? fr.R.partial(1, 0) : fr.R.partial(0, 1);
            double rhs = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int k = 0; k < 2; ++k)
                    rhs += einv.at(i, k) * covariant_db(fr, ce, m, i, k);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
        return PointEval{worst, fr.cond_g, fr.cond_e};
    });
}

/// Both sides of the contraction identity
/// e^{ij} b^{km} (grad^I_m b)_{ij} x_{,k} = -nabla^II(R, x).
inline std::pair<Vec3, Vec3> eq14_sides(const Frame& fr) {
    const Christoffel cg = christoffel(fr, Form::I);
    const Sym2 einv = inverse_form(fr, Form::III);
    const Sym2 binv = inverse_form(fr, Form::II);
    const Vec3 xd[2] = {fr.Xu.value(), fr.Xv.value()};
    Vec3 lhs{};
    for (int k = 0; k < 2; ++k) {
        double coef = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int m = 0; m < 2; ++m)
                    coef += einv.at(i, j) * binv.at(k, m) * covariant_db(fr, cg, m, i, j);
        lhs = lhs + coef * xd[k];
    }
    const Vec3 rhs = -nabla1(fr, Form::II, fr.R, fr.X);
    return {lhs, rhs};
}

}  // namespace beltrami
