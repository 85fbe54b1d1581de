#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace beltrami {

/// Root of the library's error hierarchy.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZeroJet : Error {
    DivisionByZeroJet() : Error("jet division: constant term below division floor") {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

struct OrderExceeded : Error {
    explicit OrderExceeded(const std::string& what) : Error(what) {}
};

enum class Var { U, V, Constant };

/// Bivariate truncated Taylor expansion of a scalar function at a point.
///
/// Coefficient (a,b) stores (1/(a! b!)) ∂^{a+b}f / ∂u^a ∂v^b, for all a+b ≤ order.
/// Storage is dense triangular in graded-lex layout, so truncation to a lower
/// order is a prefix copy. Arithmetic never reads or writes past the order
/// bound; results of binary operations carry min(order_lhs, order_rhs).
/// Jets are immutable values in practice: every operation returns a fresh jet.
class Jet {
public:
    static constexpr int max_order = 10;
    static constexpr int max_slots = (max_order + 1) * (max_order + 2) / 2;
    static constexpr double division_floor = 1e-300;

    static constexpr int slots(int order) { return (order + 1) * (order + 2) / 2; }
    static constexpr int index(int a, int b) {
        const int d = a + b;
        return d * (d + 1) / 2 + b;
    }

    Jet() : order_(1) { c_.fill(0.0); }

    static Jet constant(double value, int order) {
        Jet j = zero(order);
        j.c_[0] = value;
        return j;
    }

    /// Coordinate seed: value plus a unit first-order coefficient in the
    /// chosen direction (none for Var::Constant).
    static Jet seed(double value, Var which, int order) {
        check_order(order, 1);
        Jet j = zero(order);
        j.c_[0] = value;
        if (which == Var::U) j.c_[index(1, 0)] = 1.0;
        if (which == Var::V) j.c_[index(0, 1)] = 1.0;
        return j;
    }

    static Jet zero(int order) {
        check_order(order, 0);
        Jet j;
        j.order_ = order;
        j.c_.fill(0.0);
        return j;
    }

    int order() const { return order_; }
    double value() const { return c_[0]; }

    double coeff(int a, int b) const {
        if (a < 0 || b < 0 || a + b > order_)
            throw OrderExceeded("jet coefficient index exceeds order");
        return c_[index(a, b)];
    }

    void set_coeff(int a, int b, double v) {
        if (a < 0 || b < 0 || a + b > order_)
            throw OrderExceeded("jet coefficient index exceeds order");
        c_[index(a, b)] = v;
    }

    /// Raw partial derivative ∂^{i+j}f/∂u^i∂v^j (factorials restored).
    double partial(int i, int j) const {
        if (i < 0 || j < 0 || i + j > order_)
            throw OrderExceeded("requested partial derivative exceeds jet order");
        return c_[index(i, j)] * factorial(i) * factorial(j);
    }

    bool finite() const {
        const int n = slots(order_);
        for (int i = 0; i < n; ++i)
            if (!std::isfinite(c_[i])) return false;
        return true;
    }

    Jet truncated(int new_order) const {
        if (new_order > order_)
            throw OrderExceeded("cannot truncate a jet to a higher order");
        Jet j = zero(new_order);
        std::copy_n(c_.begin(), slots(new_order), j.c_.begin());
        return j;
    }

    /// Jet of ∂f/∂u, one order lower.
    Jet deriv_u() const {
        if (order_ < 1) throw OrderExceeded("cannot differentiate an order-0 jet");
        Jet j = zero(order_ - 1);
        for (int d = 1; d <= order_; ++d)
            for (int b = 0; b <= d; ++b) {
                const int a = d - b;
                if (a >= 1) j.c_[index(a - 1, b)] = a * c_[index(a, b)];
            }
        return j;
    }

    Jet deriv_v() const {
        if (order_ < 1) throw OrderExceeded("cannot differentiate an order-0 jet");
        Jet j = zero(order_ - 1);
        for (int d = 1; d <= order_; ++d)
            for (int b = 0; b <= d; ++b) {
                const int a = d - b;
                if (b >= 1) j.c_[index(a, b - 1)] = b * c_[index(a, b)];
            }
        return j;
    }

    /// u-antiderivative with zero constant-in-u part, one order higher.
    Jet antideriv_u() const {
        check_order(order_ + 1, 0);
        Jet j = zero(order_ + 1);
        for (int d = 0; d <= order_; ++d)
            for (int b = 0; b <= d; ++b) {
                const int a = d - b;
                j.c_[index(a + 1, b)] = c_[index(a, b)] / (a + 1);
            }
        return j;
    }

    /// The jet of f(v,u): swaps the roles of the two variables.
    Jet swapped_vars() const {
        Jet j = zero(order_);
        for (int d = 0; d <= order_; ++d)
            for (int b = 0; b <= d; ++b)
                j.c_[index(b, d - b)] = c_[index(d - b, b)];
        return j;
    }

    Jet operator-() const {
        Jet j = *this;
        const int n = slots(order_);
        for (int i = 0; i < n; ++i) j.c_[i] = -j.c_[i];
        return j;
    }

    friend Jet operator+(const Jet& x, const Jet& y) {
        const int n = std::min(x.order_, y.order_);
        Jet j = zero(n);
        const int m = slots(n);
        for (int i = 0; i < m; ++i) j.c_[i] = x.c_[i] + y.c_[i];
        return j;
    }

    friend Jet operator-(const Jet& x, const Jet& y) {
        const int n = std::min(x.order_, y.order_);
        Jet j = zero(n);
        const int m = slots(n);
        for (int i = 0; i < m; ++i) j.c_[i] = x.c_[i] - y.c_[i];
        return j;
    }

    /// Coefficient convolution truncated at min(order_lhs, order_rhs).
    friend Jet operator*(const Jet& x, const Jet& y) {
        const int n = std::min(x.order_, y.order_);
        Jet j = zero(n);
        for (int d = 0; d <= n; ++d)
            for (int b = 0; b <= d; ++b) {
                const int a = d - b;
                double acc = 0.0;
                for (int p = 0; p <= a; ++p)
                    for (int q = 0; q <= b; ++q)
                        acc += x.c_[index(p, q)] * y.c_[index(a - p, b - q)];
                j.c_[index(a, b)] = acc;
            }
        return j;
    }

    friend Jet operator/(const Jet& x, const Jet& y) { return divide(x, y); }

    /// Truncated Taylor division solved degree by degree.
    static Jet divide(const Jet& x, const Jet& y, double floor = division_floor) {
        const int n = std::min(x.order_, y.order_);
        if (std::abs(y.c_[0]) < floor) throw DivisionByZeroJet();
        Jet j = zero(n);
        for (int d = 0; d <= n; ++d)
            for (int b = 0; b <= d; ++b) {
                const int a = d - b;
                double acc = x.c_[index(a, b)];
                for (int p = 0; p <= a; ++p)
                    for (int q = 0; q <= b; ++q) {
                        if (p == 0 && q == 0) continue;
                        acc -= y.c_[index(p, q)] * j.c_[index(a - p, b - q)];
                    }
                j.c_[index(a, b)] = acc / y.c_[0];
            }
        return j;
    }

    friend Jet operator+(const Jet& x, double s) {
        Jet j = x;
        j.c_[0] += s;
        return j;
    }
    friend Jet operator+(double s, const Jet& x) { return x + s; }
    friend Jet operator-(const Jet& x, double s) { return x + (-s); }
    friend Jet operator-(double s, const Jet& x) { return -x + s; }
    friend Jet operator*(const Jet& x, double s) {
        Jet j = x;
        const int n = slots(j.order_);
        for (int i = 0; i < n; ++i) j.c_[i] *= s;
        return j;
    }
    friend Jet operator*(double s, const Jet& x) { return x * s; }
    friend Jet operator/(const Jet& x, double s) {
        if (std::abs(s) < division_floor) throw DivisionByZeroJet();
        return x * (1.0 / s);
    }
    friend Jet operator/(double s, const Jet& x) { return constant(s, x.order_) / x; }

    /// Composes the univariate Taylor series tc[0..m] (coefficients of t ↦ f(a0+t))
    /// with the zero-constant-term part of `a`. Exact for truncated arithmetic.
    static Jet compose_series(const double* tc, int m, const Jet& a) {
        Jet h = a;
        h.c_[0] = 0.0;
        Jet r = constant(tc[m], a.order_);
        for (int k = m - 1; k >= 0; --k) r = r * h + tc[k];
        return r;
    }

    static double factorial(int n) {
        static const std::array<double, max_order * 2 + 1> table = [] {
            std::array<double, max_order * 2 + 1> t{};
            t[0] = 1.0;
            for (int i = 1; i < static_cast<int>(t.size()); ++i) t[i] = t[i - 1] * i;
            return t;
        }();
        return table[n];
    }

private:
    static void check_order(int order, int low) {
        if (order < low || order > max_order)
            throw OrderExceeded("jet order out of supported range");
    }

    int order_;
    std::array<double, max_slots> c_;
};

namespace detail {

inline Jet lift_sin_cos(const Jet& a, bool is_sin) {
    const int m = a.order();
    double tc[Jet::max_order + 1];
    double s = std::sin(a.value()), c = std::cos(a.value());
    for (int k = 0; k <= m; ++k) {
        tc[k] = (is_sin ? s : c) / Jet::factorial(k);
        const double ns = c, nc = -s;  // derivative rotates (sin,cos)
        s = ns;
        c = nc;
    }
    return Jet::compose_series(tc, m, a);
}

inline Jet lift_sinh_cosh(const Jet& a, bool is_sinh) {
    const int m = a.order();
    double tc[Jet::max_order + 1];
    const double sh = std::sinh(a.value()), ch = std::cosh(a.value());
    for (int k = 0; k <= m; ++k) {
        const bool even = (k % 2 == 0);
        tc[k] = ((is_sinh == even) ? sh : ch) / Jet::factorial(k);
    }
    return Jet::compose_series(tc, m, a);
}

}  // namespace detail

inline Jet sin(const Jet& a) { return detail::lift_sin_cos(a, true); }
inline Jet cos(const Jet& a) { return detail::lift_sin_cos(a, false); }
inline Jet sinh(const Jet& a) { return detail::lift_sinh_cosh(a, true); }
inline Jet cosh(const Jet& a) { return detail::lift_sinh_cosh(a, false); }

inline Jet exp(const Jet& a) {
    const int m = a.order();
    double tc[Jet::max_order + 1];
    const double e0 = std::exp(a.value());
    for (int k = 0; k <= m; ++k) tc[k] = e0 / Jet::factorial(k);
    return Jet::compose_series(tc, m, a);
}

inline Jet log(const Jet& a) {
    if (!(a.value() > 0.0)) throw DomainError("ln of a jet with non-positive constant term");
    const int m = a.order();
    double tc[Jet::max_order + 1];
    tc[0] = std::log(a.value());
    double p = 1.0;
    for (int k = 1; k <= m; ++k) {
        p *= a.value();
        tc[k] = ((k % 2 == 1) ? 1.0 : -1.0) / (k * p);
    }
    return Jet::compose_series(tc, m, a);
}

/// Real-exponent power; requires a positive constant term.
inline Jet pow(const Jet& a, double r) {
    if (!(a.value() > 0.0))
        throw DomainError("pow with real exponent needs a positive constant term");
    const int m = a.order();
    double tc[Jet::max_order + 1];
    double binom = 1.0;  // r(r-1)...(r-k+1)/k!
    for (int k = 0; k <= m; ++k) {
        if (k > 0) binom *= (r - (k - 1)) / k;
        tc[k] = binom * std::pow(a.value(), r - k);
    }
    return Jet::compose_series(tc, m, a);
}

/// Integer power via binary exponentiation; valid for any base.
inline Jet pow(const Jet& a, int n) {
    if (n < 0) return Jet::constant(1.0, a.order()) / pow(a, -n);
    Jet result = Jet::constant(1.0, a.order());
    Jet base = a;
    unsigned e = static_cast<unsigned>(n);
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

inline Jet sqrt(const Jet& a) {
    if (!(a.value() > 0.0)) throw DomainError("sqrt of a jet with non-positive constant term");
    return pow(a, 0.5);
}

inline Jet tan(const Jet& a) {
    if (std::abs(std::cos(a.value())) < 1e-300)
        throw DomainError("tan of a jet at a pole of tan");
    return sin(a) / cos(a);
}

inline Jet abs(const Jet& a) {
    if (a.value() == 0.0) throw DomainError("abs of a jet with zero constant term");
    return a.value() > 0.0 ? a : -a;
}

}  // namespace beltrami
