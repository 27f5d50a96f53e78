#pragma once

// Exact rational geometry: scalars, 3-vectors and rigid motions.
//
// Every coordinate in the engine is an arbitrary-precision rational. Repeated
// face reflections produce denominators that grow as powers of 3, so there is
// no fixed-width fallback.

#include <array>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "radiogram/error.hpp"

namespace radiogram {

/// Arbitrary-precision rational, always kept in lowest terms.
using Scalar = mpq_class;

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& s);

/// Parses the canonical text form (also accepts non-reduced input such as
/// "4/6" and normalizes it). Throws Error{ErrorCode::ParseError} otherwise.
Scalar parse_scalar(std::string_view text);

std::strong_ordering compare(const Scalar& a, const Scalar& b);

struct Vec3 {
    Scalar x;
    Scalar y;
    Scalar z;

    Vec3() = default;
    Vec3(Scalar x_, Scalar y_, Scalar z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    Vec3(long x_, long y_, long z_) : x(x_), y(y_), z(z_) {}

    const Scalar& operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
    Scalar& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3& operator+=(const Vec3& o);
    Vec3& operator-=(const Vec3& o);
    Vec3& operator*=(const Scalar& s);

    friend bool operator==(const Vec3& a, const Vec3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    // Lexicographic (x, then y, then z).
    friend std::strong_ordering operator<=>(const Vec3& a, const Vec3& b);
};

Vec3 operator+(Vec3 a, const Vec3& b);
Vec3 operator-(Vec3 a, const Vec3& b);
Vec3 operator-(const Vec3& a);
Vec3 operator*(const Scalar& s, Vec3 v);
Vec3 operator/(Vec3 v, const Scalar& s);

Scalar dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Scalar norm2(const Vec3& v);
Scalar distance2(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);

/// "[x, y, z]" using the canonical scalar form.
std::string to_string(const Vec3& v);
std::ostream& operator<<(std::ostream& os, const Vec3& v);

/// Row-major 3x3 rational matrix.
struct Mat3 {
    std::array<Scalar, 9> m;

    static Mat3 identity();
    static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);

    const Scalar& operator()(int r, int c) const { return m[static_cast<std::size_t>(r * 3 + c)]; }
    Scalar& operator()(int r, int c) { return m[static_cast<std::size_t>(r * 3 + c)]; }

    Vec3 column(int c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c)}; }

    friend bool operator==(const Mat3& a, const Mat3& b) = default;
};

Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& v);
Mat3 transpose(const Mat3& a);
Scalar determinant(const Mat3& a);
/// Throws Error{ErrorCode::SingularMatrix} when det = 0.
Mat3 inverse(const Mat3& a);

/// Rigid motion p -> Q p + t with Q exactly orthogonal.
class Isometry {
public:
    /// The identity motion.
    Isometry();

    /// Validates QᵀQ = I exactly; throws Error{ErrorCode::NotOrthogonal} otherwise.
    Isometry(Mat3 q, Vec3 t);

    static Isometry translation(Vec3 t);

    const Mat3& linear() const { return q_; }
    const Vec3& offset() const { return t_; }
    int det_sign() const { return det_sign_; }
    bool is_proper() const { return det_sign_ > 0; }

    Vec3 apply(const Vec3& p) const;
    /// Applies only the linear part (directions, normals).
    Vec3 apply_linear(const Vec3& v) const;
    Isometry inverse() const;

    friend bool operator==(const Isometry& a, const Isometry& b) {
        return a.q_ == b.q_ && a.t_ == b.t_;
    }

private:
    struct Unchecked {};
    Isometry(Mat3 q, Vec3 t, int det_sign, Unchecked);

    friend Isometry compose(const Isometry& a, const Isometry& b);

    Mat3 q_;
    Vec3 t_;
    int det_sign_ = 1;
};

/// The motion that applies `b` first, then `a`.
Isometry compose(const Isometry& a, const Isometry& b);

inline Vec3 apply(const Isometry& m, const Vec3& p) { return m.apply(p); }

/// Reflection through the plane {p : n·p = d}. Throws Error{ErrorCode::ZeroNormal}.
Isometry reflection_through_plane(const Vec3& n, const Scalar& d);

/// Proper rotation about an axis through the origin that maps the ordered
/// coordinate axes cyclically (x -> y -> z -> x).
Isometry cyclic_axis_rotation();

}  // namespace radiogram
