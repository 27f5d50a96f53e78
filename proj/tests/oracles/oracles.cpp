#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace oracle {

namespace {

using Q = mpq_class;

struct P {
    Q v[3];
};

P from(const Vec3& p) { return {{p.x, p.y, p.z}}; }

P sub(const P& a, const P& b) { return {{a.v[0] - b.v[0], a.v[1] - b.v[1], a.v[2] - b.v[2]}}; }

Q dotp(const P& a, const P& b) { return a.v[0] * b.v[0] + a.v[1] * b.v[1] + a.v[2] * b.v[2]; }

P crossp(const P& a, const P& b) {
    return {{a.v[1] * b.v[2] - a.v[2] * b.v[1], a.v[2] * b.v[0] - a.v[0] * b.v[2],
             a.v[0] * b.v[1] - a.v[1] * b.v[0]}};
}

bool zero(const P& a) { return a.v[0] == 0 && a.v[1] == 0 && a.v[2] == 0; }

std::string key(const P& p) {
    std::string s;
    for (const Q& c : p.v) {
        Q n = c;
        n.canonicalize();
        s += n.get_str();
        s += ',';
    }
    return s;
}

using M = std::array<std::array<Q, 3>, 3>;

Q det(const M& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Adjugate over determinant.
M inv(const M& m) {
    const Q dt = det(m);
    M r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
            r[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) / dt;
        }
    }
    return r;
}

M mul(const M& a, const M& b) {
    M r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    return r;
}

M columns(const P& a, const P& b, const P& c) {
    M m;
    for (int i = 0; i < 3; ++i) {
        m[i][0] = a.v[i];
        m[i][1] = b.v[i];
        m[i][2] = c.v[i];
    }
    return m;
}

P apply(const M& q, const P& t, const P& p) {
    P r;
    for (int i = 0; i < 3; ++i) r.v[i] = q[i][0] * p.v[0] + q[i][1] * p.v[1] + q[i][2] * p.v[2] + t.v[i];
    return r;
}

struct Rigid {
    M q;
    P t;
};

using Signature = std::multiset<std::string>;

std::string solid_string(int kind, std::vector<std::string> verts) {
    std::sort(verts.begin(), verts.end());
    std::string s = std::to_string(kind) + ":";
    for (const auto& v : verts) s += v + ";";
    return s;
}

template <typename Map>
Signature signature(const Design& d, bool with_labels, Map&& map) {
    Signature sig;
    for (const auto& shape : d.shapes) {
        std::vector<std::string> verts;
        for (const auto& v : shape.vertices) verts.push_back(key(map(from(v))));
        sig.insert(solid_string(static_cast<int>(shape.kind), verts));
        if (!with_labels) continue;
        for (int f = 0; f < static_cast<int>(shape.faces.size()); ++f) {
            if (shape.faces[static_cast<std::size_t>(f)] != radiogram::FaceState::Used) continue;
            std::vector<std::string> fv;
            for (const auto& v : shape.face(f).vertices) fv.push_back(key(map(from(v))));
            sig.insert(solid_string(-1, fv));
        }
    }
    return sig;
}

// Cheap isometry invariant: kinds plus the sorted squared distances between
// all distinct vertices.
std::string invariant(const Design& d) {
    std::map<std::string, P> points;
    std::array<int, 2> kinds{};
    for (const auto& s : d.shapes) {
        ++kinds[static_cast<std::size_t>(s.kind)];
        for (const auto& v : s.vertices) points.emplace(key(from(v)), from(v));
    }
    std::vector<Q> dists;
    for (auto i = points.begin(); i != points.end(); ++i)
        for (auto j = std::next(i); j != points.end(); ++j) {
            const P e = sub(i->second, j->second);
            dists.push_back(dotp(e, e));
        }
    std::sort(dists.begin(), dists.end());
    std::string s = std::to_string(kinds[0]) + "/" + std::to_string(kinds[1]) + "|";
    for (const auto& x : dists) s += x.get_str() + ",";
    return s;
}

}  // namespace

std::size_t distance_preserving_permutations(const std::vector<Vec3>& vertices) {
    std::vector<int> perm(vertices.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < perm.size() && ok; ++i)
            for (std::size_t j = i + 1; j < perm.size() && ok; ++j) {
                const P a = sub(from(vertices[i]), from(vertices[j]));
                const P b = sub(from(vertices[static_cast<std::size_t>(perm[i])]),
                                from(vertices[static_cast<std::size_t>(perm[j])]));
                ok = dotp(a, a) == dotp(b, b);
            }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

bool same_geometry(const Design& a, const Design& b, bool with_labels) {
    auto id = [](const P& p) { return p; };
    return signature(a, with_labels, id) == signature(b, with_labels, id);
}

bool congruent(const Design& a, const Design& b, bool proper_only, bool with_labels) {
    if (a.shapes.size() != b.shapes.size() || invariant(a) != invariant(b)) return false;
    auto id = [](const P& p) { return p; };
    const Signature target = signature(b, with_labels, id);

    // Four affinely independent vertices of a's first solid.
    const auto& anchor = a.shapes.front();
    std::vector<P> src;
    {
        const P v0 = from(anchor.vertices[0]);
        src.push_back(v0);
        for (std::size_t i = 1; i < anchor.vertices.size() && src.size() < 4; ++i) {
            const P v = from(anchor.vertices[i]);
            const P e = sub(v, v0);
            if (zero(e)) continue;
            if (src.size() == 2 && zero(crossp(sub(src[1], v0), e))) continue;
            if (src.size() == 3 && dotp(crossp(sub(src[1], v0), sub(src[2], v0)), e) == 0) continue;
            src.push_back(v);
        }
    }
    const M a_inv = inv(columns(sub(src[1], src[0]), sub(src[2], src[0]), sub(src[3], src[0])));

    for (const auto& shape : b.shapes) {
        if (shape.kind != anchor.kind) continue;
        const std::size_t n = shape.vertices.size();
        std::vector<P> dst;
        for (const auto& v : shape.vertices) dst.push_back(from(v));
        for (std::size_t i0 = 0; i0 < n; ++i0)
            for (std::size_t i1 = 0; i1 < n; ++i1)
                for (std::size_t i2 = 0; i2 < n; ++i2)
                    for (std::size_t i3 = 0; i3 < n; ++i3) {
                        const std::array<std::size_t, 4> ix{i0, i1, i2, i3};
                        bool ok = true;
                        for (int p = 0; p < 4 && ok; ++p)
                            for (int q = p + 1; q < 4 && ok; ++q) {
                                const P s = sub(src[static_cast<std::size_t>(p)], src[static_cast<std::size_t>(q)]);
                                const P t = sub(dst[ix[static_cast<std::size_t>(p)]], dst[ix[static_cast<std::size_t>(q)]]);
                                ok = dotp(s, s) == dotp(t, t);
                            }
                        if (!ok) continue;
                        const M q = mul(columns(sub(dst[i1], dst[i0]), sub(dst[i2], dst[i0]), sub(dst[i3], dst[i0])),
                                        a_inv);
                        const Q dt = det(q);
                        if (proper_only && dt < 0) continue;
                        P t0 = dst[i0];
                        const P qa0 = apply(q, P{{0, 0, 0}}, src[0]);
                        const P t = sub(t0, qa0);
                        const Rigid g{q, t};
                        if (signature(a, with_labels, [&](const P& p) { return apply(g.q, g.t, p); }) == target) {
                            return true;
                        }
                    }
    }
    return false;
}

bool hulls_overlap(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
    struct Half {
        P n;
        Q d;
    };
    std::vector<Half> halves;
    auto facets = [&](const std::vector<Vec3>& raw) {
        std::vector<P> v;
        for (const auto& p : raw) v.push_back(from(p));
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                for (std::size_t k = j + 1; k < v.size(); ++k) {
                    P n = crossp(sub(v[j], v[i]), sub(v[k], v[i]));
                    if (zero(n)) continue;
                    Q d = dotp(n, v[i]);
                    bool below = true, above = true;
                    for (const auto& p : v) {
                        const Q s = dotp(n, p) - d;
                        below = below && s <= 0;
                        above = above && s >= 0;
                    }
                    if (above && !below) {
                        for (auto& c : n.v) c = -c;
                        d = -d;
                    }
                    if (above != below) halves.push_back({n, d});
                }
    };
    facets(a);
    facets(b);

    std::vector<P> corners;
    for (std::size_t i = 0; i < halves.size(); ++i)
        for (std::size_t j = i + 1; j < halves.size(); ++j)
            for (std::size_t k = j + 1; k < halves.size(); ++k) {
                M m;
                for (int c = 0; c < 3; ++c) {
                    m[0][c] = halves[i].n.v[c];
                    m[1][c] = halves[j].n.v[c];
                    m[2][c] = halves[k].n.v[c];
                }
                if (det(m) == 0) continue;
                const M mi = inv(m);
                const P rhs{{halves[i].d, halves[j].d, halves[k].d}};
                const P x = apply(mi, P{{0, 0, 0}}, rhs);
                bool inside = true;
                for (const auto& h : halves) inside = inside && dotp(h.n, x) <= h.d;
                if (inside) corners.push_back(x);
            }
    if (corners.empty()) return false;
    const P o = corners.front();
    for (std::size_t i = 1; i < corners.size(); ++i)
        for (std::size_t j = i + 1; j < corners.size(); ++j) {
            const P c = crossp(sub(corners[i], o), sub(corners[j], o));
            if (zero(c)) continue;
            for (std::size_t k = j + 1; k < corners.size(); ++k)
                if (dotp(c, sub(corners[k], o)) != 0) return true;
        }
    return false;
}

FrameUnion frame_union(const Design& d) {
    FrameUnion u;
    for (const auto& s : d.shapes) {
        for (std::size_t i = 0; i < s.vertices.size(); ++i) {
            const P vi = from(s.vertices[i]);
            u.nodes.insert(key(vi));
            for (std::size_t j = i + 1; j < s.vertices.size(); ++j) {
                const P e = sub(vi, from(s.vertices[j]));
                if (dotp(e, e) != 2) continue;
                std::string a = key(vi), b = key(from(s.vertices[j]));
                if (b < a) std::swap(a, b);
                u.struts.emplace(std::move(a), std::move(b));
            }
        }
    }
    return u;
}

bool on_fcc(const Design& d, const Vec3& shift) {
    const P s = from(shift);
    for (const auto& shape : d.shapes)
        for (const auto& v : shape.vertices) {
            mpz_class sum = 0;
            for (int i = 0; i < 3; ++i) {
                Q c = from(v).v[i] + s.v[i];
                c.canonicalize();
                if (c.get_den() != 1) return false;
                sum += c.get_num();
            }
            if (sum % 2 != 0) return false;
        }
    return true;
}

std::array<double, 3> householder_double(std::array<double, 3> n, double d, std::array<double, 3> x) {
    const double nn = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
    const double s = 2.0 * (n[0] * x[0] + n[1] * x[1] + n[2] * x[2] - d) / nn;
    return {x[0] - s * n[0], x[1] - s * n[1], x[2] - s * n[2]};
}

}  // namespace oracle
