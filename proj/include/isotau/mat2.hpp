#ifndef ISOTAU_MAT2_HPP
#define ISOTAU_MAT2_HPP

#include <array>
#include <cmath>

#include "isotau/complex_util.hpp"
#include "isotau/errors.hpp"

namespace isotau {

// 2x2 complex matrix, value semantics.
struct Mat2 {
    Complex a{}, b{}, c{}, d{};   // [[a, b], [c, d]]

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 diag(Complex x, Complex y) { return {x, 0.0, 0.0, y}; }

    Complex trace() const { return a + d; }
    Complex det() const { return a * d - b * c; }

    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator*(Complex s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 operator/(Complex s) const { return {a / s, b / s, c / s, d / s}; }

    Mat2 inv() const {
        Complex dt = det();
        if (std::abs(dt) == 0.0) throw SingularError("Mat2::inv: singular matrix");
        return Mat2{d, -b, -c, a} / dt;
    }

    double norm() const {
        return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
    }

    // eigenvalues of a general 2x2 (pair ordered by construction, not sorted)
    std::array<Complex, 2> eigenvalues() const {
        Complex half_tr = trace() / 2.0;
        Complex disc = std::sqrt(half_tr * half_tr - det());
        return {half_tr + disc, half_tr - disc};
    }
};

inline Mat2 operator*(Complex s, const Mat2& m) { return m * s; }

inline Mat2 commutator(const Mat2& x, const Mat2& y) { return x * y - y * x; }

inline Complex trace_prod(const Mat2& x, const Mat2& y) {
    return x.a * y.a + x.b * y.c + x.c * y.b + x.d * y.d;
}

inline double max_abs_diff(const Mat2& x, const Mat2& y) {
    Mat2 d = x - y;
    return std::max(std::max(std::abs(d.a), std::abs(d.b)),
                    std::max(std::abs(d.c), std::abs(d.d)));
}

// diag(t^s, t^{-s}) M diag(t^{-s}, t^{s}) for real t > 0
inline Mat2 conj_by_tS(const Mat2& m, double t, Complex s) {
    Complex t2s = pow_pos(t, 2.0 * s);
    return {m.a, m.b * t2s, m.c / t2s, m.d};
}

} // namespace isotau

#endif
