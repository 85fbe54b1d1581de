#pragma once

#include <beltrami/surface.hpp>

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace beltrami {

/// Profile curve (f(u), 0, g(u)) of a surface of revolution, as expressions.
struct ProfileSpec {
    std::string name;
    Expr f, g;
    double u0 = 0, u1 = 1;
    std::string f_src, g_src;
};

namespace catalog {

inline std::string fmt(double x) {
    std::ostringstream out;
    out.precision(17);
    out << x;
    return out.str();
}

inline SurfaceSpec make_surface(const std::string& name, const std::string& x1,
                                const std::string& x2, const std::string& x3, Rect dom) {
    return SurfaceSpec{name, parse(x1), parse(x2), parse(x3), dom};
}

constexpr double two_pi = 6.283185307179586;

// Default domains stay clear of irregular parametrization loci (sphere poles)
// and parabolic circles (torus at |u| = pi/2).

inline SurfaceSpec sphere(double radius) {
    const std::string r = fmt(radius);
    return make_surface(radius == 1.0 ? "unit-sphere" : "sphere(" + fmt(radius) + ")",
                        r + "*sin(u)*cos(v)", r + "*sin(u)*sin(v)", r + "*cos(u)",
                        Rect{0.4, M_PI - 0.4, 0.0, two_pi});
}

inline SurfaceSpec unit_sphere() { return sphere(1.0); }

inline SurfaceSpec catenoid() {
    return make_surface("catenoid", "cosh(u)*cos(v)", "cosh(u)*sin(v)", "u",
                        Rect{-1.5, 1.5, 0.0, two_pi});
}

inline SurfaceSpec torus(double ring = 2.0, double tube = 1.0) {
    const std::string a = fmt(ring), r = fmt(tube);
    std::string radial = "(" + a + "+" + r + "*cos(u))";
    return make_surface(ring == 2.0 && tube == 1.0 ? "torus" : "torus(" + a + "," + r + ")",
                        radial + "*cos(v)", radial + "*sin(v)", r + "*sin(u)",
                        Rect{-1.2, 1.2, 0.0, two_pi});
}

inline SurfaceSpec ellipsoid(double a = 1.0, double b = 1.2, double c = 0.8) {
    const bool defaults = a == 1.0 && b == 1.2 && c == 0.8;
    return make_surface(defaults ? "ellipsoid"
                                 : "ellipsoid(" + fmt(a) + "," + fmt(b) + "," + fmt(c) + ")",
                        fmt(a) + "*sin(u)*cos(v)", fmt(b) + "*sin(u)*sin(v)", fmt(c) + "*cos(u)",
                        Rect{0.4, M_PI - 0.4, 0.0, two_pi});
}

inline SurfaceSpec helicoid(double pitch = 1.0) {
    return make_surface(pitch == 1.0 ? "helicoid" : "helicoid(" + fmt(pitch) + ")", "u*cos(v)",
                        "u*sin(v)", fmt(pitch) + "*v", Rect{-1.0, 1.0, 0.0, two_pi});
}

inline SurfaceSpec enneper() {
    return make_surface("enneper", "u-u^3/3+u*v^2", "v-v^3/3+v*u^2", "u^2-v^2",
                        Rect{-0.8, 0.8, -0.8, 0.8});
}

/// Degenerate example: every point is parabolic (K = 0).
inline SurfaceSpec cylinder(double radius = 1.0) {
    const std::string r = fmt(radius);
    return make_surface(radius == 1.0 ? "cylinder" : "cylinder(" + fmt(radius) + ")",
                        r + "*cos(v)", r + "*sin(v)", "u", Rect{-1.0, 1.0, 0.0, two_pi});
}

inline ProfileSpec make_profile(const std::string& name, const std::string& f,
                                const std::string& g, double u0, double u1) {
    return ProfileSpec{name, parse(f), parse(g), u0, u1, f, g};
}

/// Unit-speed circle arc; revolves to the unit sphere.
inline ProfileSpec circle_arc() {
    return make_profile("circle-arc", "sin(u)", "-cos(u)", 0.4, M_PI - 0.4);
}

/// Catenary (not arc-length parametrized); revolves to the catenoid.
inline ProfileSpec catenary() { return make_profile("catenary", "cosh(u)", "u", -1.2, 1.2); }

/// Torus profile; already unit speed.
inline ProfileSpec torus_profile(double ring = 2.0, double tube = 1.0) {
    (void)tube;
    return make_profile("torus-profile", fmt(ring) + "+cos(u)", "sin(u)", -1.2, 1.2);
}

/// Straight profile; revolves to the (all-parabolic) cylinder.
inline ProfileSpec cylinder_profile() { return make_profile("cylinder-profile", "1", "u", -1.0, 1.0); }

struct Entry {
    std::string name;       // canonical name with default parameters
    std::string params;     // parameter signature for the listing, "" if none
    std::string what;       // one-line description
    bool degenerate = false;
    bool is_profile = false;
};

inline const std::vector<Entry>& entries() {
    static const std::vector<Entry> list = {
        {"unit-sphere", "", "round sphere of radius 1; u in [0.4, pi-0.4]", false, false},
        {"sphere", "(radius=2)", "round sphere; u avoids the poles", false, false},
        {"catenoid", "", "minimal surface, u in [-1.5, 1.5]", false, false},
        {"torus", "(a=2, r=1)", "torus patch, u in [-1.2, 1.2] away from parabolic circles",
         false, false},
        {"ellipsoid", "(a=1, b=1.2, c=0.8)", "triaxial ellipsoid patch", false, false},
        {"helicoid", "(pitch=1)", "minimal ruled surface patch", false, false},
        {"enneper", "", "Enneper minimal surface patch, u,v in [-0.8, 0.8]", false, false},
        {"cylinder", "(radius=1)", "circular cylinder; all points parabolic", true, false},
        {"circle-arc", "", "profile: unit-speed circle arc (revolves to the unit sphere)",
         false, true},
        {"catenary", "", "profile: catenary f=cosh(u), g=u (revolves to the catenoid)", false,
         true},
        {"torus-profile", "", "profile: unit-speed torus section f=2+cos(u), g=sin(u)", false,
         true},
        {"cylinder-profile", "", "profile: straight line f=1, g=u (all parabolic)", true, true},
    };
    return list;
}

/// Parses "name" or "name(p1,p2,...)" into a surface spec.
inline std::optional<SurfaceSpec> lookup_surface(const std::string& request) {
    std::string name = request;
    std::vector<double> args;
    const auto open = request.find('(');
    if (open != std::string::npos && request.back() == ')') {
        name = request.substr(0, open);
        std::string inner = request.substr(open + 1, request.size() - open - 2);
        std::istringstream in(inner);
        std::string tok;
        while (std::getline(in, tok, ',')) args.push_back(std::stod(tok));
    }
    auto arg = [&](std::size_t i, double dflt) { return i < args.size() ? args[i] : dflt; };
    if (name == "unit-sphere") return unit_sphere();
    if (name == "sphere") return sphere(arg(0, 2.0));
    if (name == "catenoid") return catenoid();
    if (name == "torus") return torus(arg(0, 2.0), arg(1, 1.0));
    if (name == "ellipsoid") return ellipsoid(arg(0, 1.0), arg(1, 1.2), arg(2, 0.8));
    if (name == "helicoid") return helicoid(arg(0, 1.0));
    if (name == "enneper") return enneper();
    if (name == "cylinder") return cylinder(arg(0, 1.0));
    return std::nullopt;
}

inline std::optional<ProfileSpec> lookup_profile(const std::string& name) {
    if (name == "circle-arc") return circle_arc();
    if (name == "catenary") return catenary();
    if (name == "torus-profile") return torus_profile();
    if (name == "cylinder-profile") return cylinder_profile();
    return std::nullopt;
}

/// Profile generating the same surface as a revolution-symmetric catalog
/// entry, when one exists (used by the revolution-only identity suites).
inline std::optional<ProfileSpec> profile_for_surface(const std::string& name) {
    if (name == "unit-sphere") return make_profile("unit-sphere-profile", "sin(u)", "-cos(u)",
                                                   0.4, M_PI - 0.4);
    if (name == "catenoid") return catenary();
    if (name == "torus") return torus_profile();
    if (name == "cylinder") return cylinder_profile();
    return std::nullopt;
}

}  // namespace catalog
}  // namespace beltrami
