#pragma once

#include <beltrami/jet.hpp>

#include <algorithm>
#include <cmath>

namespace beltrami {

struct IrregularPoint : Error {
    IrregularPoint() : Error("irregular point: |x_u x x_v| below regularity floor") {}
};

struct ParabolicPoint : Error {
    ParabolicPoint() : Error("parabolic point: |K| below parabolic floor") {}
};

struct SingularForm : Error {
    SingularForm() : Error("fundamental form is numerically singular") {}
};

struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& what) : Error(what) {}
};

/// Numerical gates for frame evaluation.
struct Floors {
    double regularity = 1e-9;  // lower bound on |x_u x x_v|
    double parabolic = 1e-6;   // lower bound on |K|
};

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// 3-vector of jets: a local Taylor model of a map (u,v) -> R^3.
struct JetVec3 {
    Jet x, y, z;

    JetVec3() = default;
    JetVec3(Jet x_, Jet y_, Jet z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    int order() const { return std::min({x.order(), y.order(), z.order()}); }
    Vec3 value() const { return {x.value(), y.value(), z.value()}; }
    bool finite() const { return x.finite() && y.finite() && z.finite(); }

    Vec3 partial(int i, int j) const { return {x.partial(i, j), y.partial(i, j), z.partial(i, j)}; }

    JetVec3 truncated(int n) const { return {x.truncated(n), y.truncated(n), z.truncated(n)}; }
    JetVec3 deriv_u() const { return {x.deriv_u(), y.deriv_u(), z.deriv_u()}; }
    JetVec3 deriv_v() const { return {x.deriv_v(), y.deriv_v(), z.deriv_v()}; }
    JetVec3 swapped_vars() const {
        return {x.swapped_vars(), y.swapped_vars(), z.swapped_vars()};
    }

    JetVec3 operator+(const JetVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    JetVec3 operator-(const JetVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    JetVec3 operator-() const { return {-x, -y, -z}; }
    JetVec3 operator*(const Jet& s) const { return {x * s, y * s, z * s}; }
    JetVec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    JetVec3 operator/(const Jet& s) const { return {x / s, y / s, z / s}; }

    Jet dot(const JetVec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Jet cross_x(const JetVec3& o) const { return y * o.z - z * o.y; }

    JetVec3 cross(const JetVec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
};

inline JetVec3 operator*(const Jet& s, const JetVec3& v) { return v * s; }

/// Symmetric 2x2 tensor of doubles.
struct Sym2 {
    double a11 = 0, a12 = 0, a22 = 0;

    double det() const { return a11 * a22 - a12 * a12; }
    double at(int i, int j) const { return (i == j) ? (i == 0 ? a11 : a22) : a12; }

    bool positive_definite() const { return a11 > 0 && det() > 0; }

    /// Condition number from the symmetric 2x2 eigenvalues.
    double cond() const {
        const double tr = a11 + a22;
        const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det()));
        const double l1 = std::abs((tr + disc) / 2.0);
        const double l2 = std::abs((tr - disc) / 2.0);
        if (l2 == 0.0) return std::numeric_limits<double>::infinity();
        return std::max(l1, l2) / std::min(l1, l2);
    }

    Sym2 inverse(double floor = 1e-30) const {
        const double d = det();
        const double scale = std::max({std::abs(a11), std::abs(a12), std::abs(a22)});
        if (std::abs(d) < std::max(floor, 1e-14 * scale * scale)) throw SingularForm();
        return {a22 / d, -a12 / d, a11 / d};
    }
};

/// Symmetric 2x2 tensor of jets (component functions of a fundamental form).
struct Sym2j {
    Jet a11, a12, a22;

    Sym2 value() const { return {a11.value(), a12.value(), a22.value()}; }
    const Jet& at(int i, int j) const { return (i == j) ? (i == 0 ? a11 : a22) : a12; }

    /// First derivative values d_{ij,m} with m in {0,1} = {u,v}.
    double dcomp(int i, int j, int m) const {
        return m == 0 ? at(i, j).partial(1, 0) : at(i, j).partial(0, 1);
    }
};

struct Rect {
    double u0 = 0, u1 = 1, v0 = 0, v1 = 1;

    double width() const { return u1 - u0; }
    double height() const { return v1 - v0; }
    bool contains(double u, double v) const {
        return u >= u0 && u <= u1 && v >= v0 && v <= v1;
    }
    bool degenerate() const { return !(width() > 0.0) || !(height() > 0.0); }
};

}  // namespace beltrami
