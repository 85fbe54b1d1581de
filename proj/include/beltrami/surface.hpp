#pragma once

#include <beltrami/expr.hpp>
#include <beltrami/geometry.hpp>
#include <beltrami/report.hpp>

#include <cmath>
#include <functional>
#include <string>
#include <utility>

namespace beltrami {

/// A parametric surface patch. The evaluator returns the three coordinate
/// jets of x(u,v) at the requested truncation order; implementations wrap
/// expression triples, offsets of other immersions, or revolved profiles.
struct Immersion {
    std::string name;
    Rect domain;
    std::function<JetVec3(double u, double v, int order)> eval;
};

/// Expression-defined surface: three coordinate expressions in (u,v).
struct SurfaceSpec {
    std::string name;
    Expr x1, x2, x3;
    Rect domain;
};

inline Immersion make_immersion(const SurfaceSpec& spec) {
    if (spec.domain.degenerate())
        throw DomainError("surface domain must have positive side lengths");
    return Immersion{
        spec.name, spec.domain,
        [spec](double u, double v, int order) {
            const Jet ju = Jet::seed(u, Var::U, order);
            const Jet jv = Jet::seed(v, Var::V, order);
            return JetVec3{eval_jet(spec.x1, ju, jv), eval_jet(spec.x2, ju, jv),
                           eval_jet(spec.x3, ju, jv)};
        }};
}

/// The same point set traversed with u and v exchanged (orientation flip).
inline Immersion swap_parameters(const Immersion& s) {
    return Immersion{s.name + "[uv-swapped]",
                     Rect{s.domain.v0, s.domain.v1, s.domain.u0, s.domain.u1},
                     [eval = s.eval](double u, double v, int order) {
                         return eval(v, u, order).swapped_vars();
                     }};
}

/// All pointwise geometric data of an immersion at one parameter point,
/// kept as jets so that downstream operators can read any derivative they
/// need. Orders: x at `order`, N and g one lower, b/e/K/H/R two lower.
struct Frame {
    double u = 0, v = 0;
    int order = 0;

    Jet ju, jv;        // coordinate seeds at `order`
    JetVec3 X;         // position
    JetVec3 Xu, Xv;    // first derivatives
    JetVec3 N;         // unit normal (cross-product convention)
    Sym2j g, b, e;     // fundamental form components
    Jet K, H, R, W;    // curvatures, curvature-radius sum, support function

    Sym2 gv, bv, ev;   // form values
    double cond_g = 0, cond_e = 0;

    Vec3 x() const { return X.value(); }
    Vec3 normal() const { return N.value(); }
    double gauss() const { return K.value(); }
    double mean() const { return H.value(); }
    double radii_sum() const { return R.value(); }
    double support() const { return W.value(); }
};

/// Evaluates the full frame at (u,v). Throws IrregularPoint when the patch
/// is degenerate there and ParabolicPoint when |K| falls below the floor.
inline Frame compute_frame(const Immersion& s, double u, double v, int order = 5,
                           const Floors& floors = {}) {
    if (order < 3 || order > Jet::max_order)
        throw OrderExceeded("frame evaluation needs jet order in [3, max_order]");

    Frame fr;
    fr.u = u;
    fr.v = v;
    fr.order = order;
    fr.ju = Jet::seed(u, Var::U, order);
    fr.jv = Jet::seed(v, Var::V, order);

    fr.X = s.eval(u, v, order);
    if (!fr.X.finite()) throw DomainError("immersion evaluated to a non-finite jet");

    fr.Xu = fr.X.deriv_u();
    fr.Xv = fr.X.deriv_v();

    const JetVec3 cr = fr.Xu.cross(fr.Xv);
    const Jet cr_norm2 = cr.dot(cr);
    if (!(std::sqrt(cr_norm2.value()) > floors.regularity)) throw IrregularPoint();
    fr.N = cr / sqrt(cr_norm2);

    fr.g = Sym2j{fr.Xu.dot(fr.Xu), fr.Xu.dot(fr.Xv), fr.Xv.dot(fr.Xv)};

    const JetVec3 Xuu = fr.Xu.deriv_u();
    const JetVec3 Xuv = fr.Xu.deriv_v();
    const JetVec3 Xvv = fr.Xv.deriv_v();
    const JetVec3 Nlow = fr.N.truncated(order - 2);
    fr.b = Sym2j{Nlow.dot(Xuu), Nlow.dot(Xuv), Nlow.dot(Xvv)};

    const JetVec3 Nu = fr.N.deriv_u();
    const JetVec3 Nv = fr.N.deriv_v();
    fr.e = Sym2j{Nu.dot(Nu), Nu.dot(Nv), Nv.dot(Nv)};

    const Sym2j glow{fr.g.a11.truncated(order - 2), fr.g.a12.truncated(order - 2),
                     fr.g.a22.truncated(order - 2)};
    const Jet det_g = glow.a11 * glow.a22 - glow.a12 * glow.a12;
    const Jet det_b = fr.b.a11 * fr.b.a22 - fr.b.a12 * fr.b.a12;
    fr.K = det_b / det_g;
    if (std::abs(fr.K.value()) < floors.parabolic) throw ParabolicPoint();

    // 2H = g^{ij} b_{ij}
    fr.H = (glow.a22 * fr.b.a11 - 2.0 * (glow.a12 * fr.b.a12) + glow.a11 * fr.b.a22) /
           (2.0 * det_g);
    fr.R = (2.0 * fr.H) / fr.K;
    fr.W = -fr.X.truncated(order - 1).dot(fr.N);

    fr.gv = fr.g.value();
    fr.bv = fr.b.value();
    fr.ev = fr.e.value();
    fr.cond_g = fr.gv.cond();
    fr.cond_e = fr.ev.cond();

    // Internal cross-checks; these hold to rounding on any valid frame.
    const double n2 = fr.N.value().dot(fr.N.value());
    if (std::abs(n2 - 1.0) > 1e-12) throw ConsistencyError("|N| deviates from 1");
    if (std::abs(fr.R.value() * fr.K.value() - 2.0 * fr.H.value()) >
        1e-10 * std::max(1.0, std::abs(2.0 * fr.H.value())))
        throw ConsistencyError("R*K and 2H disagree");
    if (!fr.gv.positive_definite() || !fr.ev.positive_definite())
        throw ConsistencyError("metric or third form lost positive definiteness");

    // e = 2H b - K g (classical identity relating the three forms).
    const double escale = std::max({1.0, std::abs(fr.ev.a11), std::abs(fr.ev.a22)});
    for (int i = 0; i < 2; ++i)
        for (int j = i; j < 2; ++j) {
            const double lhs = fr.ev.at(i, j);
            const double rhs =
                2.0 * fr.H.value() * fr.bv.at(i, j) - fr.K.value() * fr.gv.at(i, j);
            if (std::abs(lhs - rhs) > 1e-8 * escale)
                throw ConsistencyError("e and 2H b - K g disagree");
        }

    // R equals the contraction e^{ik} b_{ik}.
    const Sym2 einv = fr.ev.inverse();
    const double contraction = einv.a11 * fr.bv.a11 + 2.0 * einv.a12 * fr.bv.a12 +
                               einv.a22 * fr.bv.a22;
    if (std::abs(contraction - fr.R.value()) > 1e-8 * std::max(1.0, std::abs(fr.R.value())))
        throw ConsistencyError("R and the e^{ik} b_{ik} contraction disagree");

    return fr;
}

/// Residuals of both Weingarten forms, N_,j + b_{jk} g^{km} x_,m and
/// N_,j + e_{jk} b^{km} x_,m, normalized by max(1, |N_,j|).
inline Report verify_weingarten(const Immersion& s, const GridSpec& grid, double tol,
                                int order = 5, const Floors& floors = {}) {
    return sweep_grid("weingarten", s.name, s.domain, grid, tol, [&](double u, double v) {
        const Frame fr = compute_frame(s, u, v, order, floors);
        const Sym2 ginv = fr.gv.inverse();
        const Sym2 binv = fr.bv.inverse();
        const Vec3 xd[2] = {fr.Xu.value(), fr.Xv.value()};
        const Vec3 nd[2] = {fr.N.partial(1, 0), fr.N.partial(0, 1)};
        double worst = 0.0;
        for (int j = 0; j < 2; ++j) {
            Vec3 lhs_g = nd[j];
            Vec3 lhs_b = nd[j];
            for (int k = 0; k < 2; ++k)
                for (int m = 0; m < 2; ++m) {
                    lhs_g = lhs_g + fr.bv.at(j, k) * ginv.at(k, m) * xd[m];
                    lhs_b = lhs_b + fr.ev.at(j, k) * binv.at(k, m) * xd[m];
                }
            const double scale = std::max(1.0, nd[j].norm());
            worst = std::max({worst, lhs_g.norm() / scale, lhs_b.norm() / scale});
        }
        return PointEval{worst, fr.cond_g, fr.cond_e};
    });
}

}  // namespace beltrami
