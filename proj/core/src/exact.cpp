#include "radiogram/exact.hpp"

#include <algorithm>
#include <cctype>

namespace radiogram {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ZeroNormal: return "ZeroNormal";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NotOrthogonal: return "NotOrthogonal";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::DegenerateFace: return "DegenerateFace";
        case ErrorCode::KindNotInGrammar: return "KindNotInGrammar";
        case ErrorCode::FaceOccupied: return "FaceOccupied";
        case ErrorCode::MoveNotApplicable: return "MoveNotApplicable";
        case ErrorCode::OverlapCreated: return "OverlapCreated";
        case ErrorCode::InvalidDesign: return "InvalidDesign";
    }
    return "Unknown";
}

std::string to_string(const Scalar& s) {
    // Values built from a (num, den) pair are not reduced by GMP.
    Scalar reduced = s;
    reduced.canonicalize();
    return reduced.get_str(10);
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
        throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
    }
    if (!den.empty() && std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
        throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
    }
    std::string normalized(text.front() == '+' ? text.substr(1) : text);
    Scalar out;
    out.set_str(normalized, 10);
    out.canonicalize();
    return out;
}

std::strong_ordering compare(const Scalar& a, const Scalar& b) {
    int c = cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Vec3& Vec3::operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
}

Vec3& Vec3::operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
}

Vec3& Vec3::operator*=(const Scalar& s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
}

std::strong_ordering operator<=>(const Vec3& a, const Vec3& b) {
    if (auto c = compare(a.x, b.x); c != 0) return c;
    if (auto c = compare(a.y, b.y); c != 0) return c;
    return compare(a.z, b.z);
}

Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
Vec3 operator-(const Vec3& a) { return {Scalar(-a.x), Scalar(-a.y), Scalar(-a.z)}; }
Vec3 operator*(const Scalar& s, Vec3 v) { return v *= s; }
Vec3 operator/(Vec3 v, const Scalar& s) {
    v.x /= s;
    v.y /= s;
    v.z /= s;
    return v;
}

Scalar dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {Scalar(a.y * b.z - a.z * b.y), Scalar(a.z * b.x - a.x * b.z), Scalar(a.x * b.y - a.y * b.x)};
}

Scalar norm2(const Vec3& v) { return dot(v, v); }
Scalar distance2(const Vec3& a, const Vec3& b) { return norm2(a - b); }
bool is_zero(const Vec3& v) { return sgn(v.x) == 0 && sgn(v.y) == 0 && sgn(v.z) == 0; }

std::string to_string(const Vec3& v) {
    return "[" + to_string(v.x) + ", " + to_string(v.y) + ", " + to_string(v.z) + "]";
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) { return os << to_string(v); }

Mat3 Mat3::identity() {
    Mat3 out;
    out(0, 0) = 1;
    out(1, 1) = 1;
    out(2, 2) = 1;
    return out;
}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    Mat3 out;
    for (int r = 0; r < 3; ++r) {
        out(r, 0) = c0[static_cast<std::size_t>(r)];
        out(r, 1) = c1[static_cast<std::size_t>(r)];
        out(r, 2) = c2[static_cast<std::size_t>(r)];
    }
    return out;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
        }
    }
    return out;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {Scalar(a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z),
            Scalar(a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z),
            Scalar(a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z)};
}

Mat3 transpose(const Mat3& a) {
    Mat3 out;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) out(r, c) = a(c, r);
    }
    return out;
}

Scalar determinant(const Mat3& a) {
    return dot(a.column(0), cross(a.column(1), a.column(2)));
}

Mat3 inverse(const Mat3& a) {
    Scalar det = determinant(a);
    if (sgn(det) == 0) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
    // Rows of the inverse are the cross products of column pairs over det.
    Vec3 r0 = cross(a.column(1), a.column(2));
    Vec3 r1 = cross(a.column(2), a.column(0));
    Vec3 r2 = cross(a.column(0), a.column(1));
    Mat3 out;
    for (int c = 0; c < 3; ++c) {
        out(0, c) = r0[static_cast<std::size_t>(c)] / det;
        out(1, c) = r1[static_cast<std::size_t>(c)] / det;
        out(2, c) = r2[static_cast<std::size_t>(c)] / det;
    }
    return out;
}

Isometry::Isometry() : q_(Mat3::identity()) {}

Isometry::Isometry(Mat3 q, Vec3 t) : q_(std::move(q)), t_(std::move(t)) {
    if (transpose(q_) * q_ != Mat3::identity()) {
        throw Error(ErrorCode::NotOrthogonal, "linear part is not orthogonal");
    }
    det_sign_ = sgn(determinant(q_)) > 0 ? 1 : -1;
}

Isometry::Isometry(Mat3 q, Vec3 t, int det_sign, Unchecked)
    : q_(std::move(q)), t_(std::move(t)), det_sign_(det_sign) {}

Isometry Isometry::translation(Vec3 t) { return Isometry(Mat3::identity(), std::move(t), 1, Unchecked{}); }

Vec3 Isometry::apply(const Vec3& p) const { return q_ * p + t_; }

Vec3 Isometry::apply_linear(const Vec3& v) const { return q_ * v; }

Isometry Isometry::inverse() const {
    Mat3 qt = transpose(q_);
    Vec3 t = -(qt * t_);
    return Isometry(std::move(qt), std::move(t), det_sign_, Unchecked{});
}

Isometry compose(const Isometry& a, const Isometry& b) {
    return Isometry(a.q_ * b.q_, a.q_ * b.t_ + a.t_, a.det_sign_ * b.det_sign_, Isometry::Unchecked{});
}

Isometry reflection_through_plane(const Vec3& n, const Scalar& d) {
    if (is_zero(n)) throw Error(ErrorCode::ZeroNormal, "plane normal must be non-zero");
    // Householder: p -> p - 2 ((n·p - d) / (n·n)) n
    Scalar nn = norm2(n);
    Mat3 q = Mat3::identity();
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            q(r, c) -= 2 * n[static_cast<std::size_t>(r)] * n[static_cast<std::size_t>(c)] / nn;
        }
    }
    Vec3 t = (Scalar(2 * d / nn)) * n;
    return Isometry(std::move(q), std::move(t));
}

Isometry cyclic_axis_rotation() {
    // Columns are the images of e_x, e_y, e_z.
    return Isometry(Mat3::from_columns({0, 1, 0}, {0, 0, 1}, {1, 0, 0}), Vec3{});
}

}  // namespace radiogram
