#include "penrose/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace penrose {

namespace {

GoldenReal signedArea2(const std::vector<GoldenPoint>& v) {
    GoldenReal s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const GoldenPoint& p = v[i];
        const GoldenPoint& q = v[(i + 1) % v.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

}  // namespace

void ConvexPolygon::normalize() {
    if (v.size() < 3) throw std::invalid_argument("ConvexPolygon: fewer than 3 vertices");
    if (signedArea2(v).sign() < 0) std::reverse(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const GoldenPoint& a = v[i];
        const GoldenPoint& b = v[(i + 1) % v.size()];
        const GoldenPoint& c = v[(i + 2) % v.size()];
        if (orientation(a, b, c) <= 0) {
            throw std::invalid_argument("ConvexPolygon: not strictly convex");
        }
    }
}

GoldenPoint ConvexPolygon::centroidTimes(long n) const {
    GoldenPoint s;
    for (const auto& p : v) s = s + p;
    if (static_cast<long>(v.size()) != n) {
        throw std::invalid_argument("centroidTimes: n must equal vertex count");
    }
    return s;
}

void ConvexPolygon::bboxApprox(double& x0, double& y0, double& x1, double& y1) const {
    x0 = y0 = 1e300;
    x1 = y1 = -1e300;
    for (const auto& p : v) {
        double px = p.x.approx(), py = p.y.approx();
        x0 = std::min(x0, px);
        y0 = std::min(y0, py);
        x1 = std::max(x1, px);
        y1 = std::max(y1, py);
    }
}

bool containsOpen(const ConvexPolygon& poly, const GoldenPoint& p) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (orientation(poly[i], poly[(i + 1) % poly.size()], p) <= 0) return false;
    }
    return true;
}

bool containsClosed(const ConvexPolygon& poly, const GoldenPoint& p) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (orientation(poly[i], poly[(i + 1) % poly.size()], p) < 0) return false;
    }
    return true;
}

namespace {

template <typename Pred>
bool latticeContains(const ConvexPolygon& poly, const GoldenPoint& p, int range, Pred pred) {
    // Cheap reject via the float bounding box; the final answer is exact.
    double x0, y0, x1, y1;
    poly.bboxApprox(x0, y0, x1, y1);
    double px = p.x.approx(), py = p.y.approx();
    for (int i = -range; i <= range; ++i) {
        for (int j = -range; j <= range; ++j) {
            if (px + i < x0 - 0.01 || px + i > x1 + 0.01 || py + j < y0 - 0.01 ||
                py + j > y1 + 0.01) {
                continue;
            }
            GoldenPoint q(p.x + GoldenReal(i), p.y + GoldenReal(j));
            if (pred(poly, q)) return true;
        }
    }
    return false;
}

}  // namespace

bool latticeContainsOpen(const ConvexPolygon& poly, const GoldenPoint& p, int range) {
    return latticeContains(poly, p, range, [](const ConvexPolygon& pl, const GoldenPoint& q) {
        return containsOpen(pl, q);
    });
}

bool latticeContainsClosed(const ConvexPolygon& poly, const GoldenPoint& p, int range) {
    return latticeContains(poly, p, range, [](const ConvexPolygon& pl, const GoldenPoint& q) {
        return containsClosed(pl, q);
    });
}

// ---------------------------------------------------------------------------
// RatPolygon
// ---------------------------------------------------------------------------

RatPolygon RatPolygon::from(const ConvexPolygon& p) {
    RatPolygon r;
    r.v.reserve(p.size());
    for (const auto& q : p.v) r.v.emplace_back(q);
    return r;
}

ConvexPolygon RatPolygon::toGolden() const {
    ConvexPolygon out;
    out.v.reserve(v.size());
    for (const auto& q : v) {
        auto gx = q.x.toGoldenReal();
        auto gy = q.y.toGoldenReal();
        if (!gx || !gy) {
            throw std::domain_error("RatPolygon::toGolden: vertex not dyadic over Z[phi]");
        }
        out.v.emplace_back(*gx, *gy);
    }
    out.normalize();
    return out;
}

GoldenRat areaTimes2(const RatPolygon& p) {
    GoldenRat s = 0;
    for (std::size_t i = 0; i < p.v.size(); ++i) {
        const RatPoint& a = p.v[i];
        const RatPoint& b = p.v[(i + 1) % p.v.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return s;
}

namespace {

// Clip CCW polygon by the half-plane on the left of a->b (keep side with
// orientation >= 0), then drop duplicate vertices.
std::vector<RatPoint> clipHalfPlane(const std::vector<RatPoint>& poly, const RatPoint& a,
                                    const RatPoint& b) {
    std::vector<RatPoint> out;
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RatPoint& cur = poly[i];
        const RatPoint& nxt = poly[(i + 1) % n];
        int sc = orientation(a, b, cur);
        int sn = orientation(a, b, nxt);
        if (sc >= 0) out.push_back(cur);
        if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
            // Segment crosses the clip line; exact intersection point.
            // cur + t (nxt - cur) with t = d_cur / (d_cur - d_nxt), where
            // d_p = cross(b - a, p - a).
            GoldenRat dc = (b.x - a.x) * (cur.y - a.y) - (b.y - a.y) * (cur.x - a.x);
            GoldenRat dn = (b.x - a.x) * (nxt.y - a.y) - (b.y - a.y) * (nxt.x - a.x);
            GoldenRat t = dc / (dc - dn);
            out.emplace_back(cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y));
        }
    }
    // Remove consecutive duplicates.
    std::vector<RatPoint> dedup;
    for (const auto& p : out) {
        if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
    }
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    return dedup;
}

// Drop collinear vertices from a CCW ring.
std::vector<RatPoint> dropCollinear(const std::vector<RatPoint>& poly) {
    std::vector<RatPoint> out;
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RatPoint& prev = poly[(i + n - 1) % n];
        const RatPoint& cur = poly[i];
        const RatPoint& nxt = poly[(i + 1) % n];
        if (orientation(prev, cur, nxt) != 0) out.push_back(cur);
    }
    return out;
}

}  // namespace

RatPolygon intersect(const RatPolygon& a, const RatPolygon& b) {
    std::vector<RatPoint> cur = a.v;
    std::size_t nb = b.v.size();
    for (std::size_t i = 0; i < nb && cur.size() >= 3; ++i) {
        cur = clipHalfPlane(cur, b.v[i], b.v[(i + 1) % nb]);
    }
    RatPolygon out;
    if (cur.size() >= 3) {
        cur = dropCollinear(cur);
        if (cur.size() >= 3) {
            RatPolygon tmp;
            tmp.v = cur;
            if (areaTimes2(tmp).sign() > 0) out.v = std::move(cur);
        }
    }
    return out;
}

ConvexPolygon translated(const ConvexPolygon& p, const GoldenPoint& t) {
    ConvexPolygon out = p;
    for (auto& q : out.v) q = q + t;
    return out;
}

RatPolygon translated(const RatPolygon& p, const RatPoint& t) {
    RatPolygon out = p;
    for (auto& q : out.v) q = q + t;
    return out;
}

GoldenRat distanceSq(const RatPolygon& poly, const RatPoint& p) {
    bool inside = true;
    GoldenRat best;
    bool haveBest = false;
    std::size_t n = poly.v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RatPoint& a = poly.v[i];
        const RatPoint& b = poly.v[(i + 1) % n];
        if (orientation(a, b, p) < 0) inside = false;
        // Distance to the closed segment [a, b].
        RatPoint ab(b.x - a.x, b.y - a.y);
        RatPoint ap(p.x - a.x, p.y - a.y);
        GoldenRat len2 = ab.x * ab.x + ab.y * ab.y;
        GoldenRat dot = ab.x * ap.x + ab.y * ap.y;
        GoldenRat d2;
        if (dot.sign() <= 0) {
            d2 = ap.x * ap.x + ap.y * ap.y;
        } else if (dot >= len2) {
            RatPoint bp(p.x - b.x, p.y - b.y);
            d2 = bp.x * bp.x + bp.y * bp.y;
        } else {
            GoldenRat cross = ab.x * ap.y - ab.y * ap.x;
            d2 = cross * cross / len2;
        }
        if (!haveBest || d2 < best) {
            best = d2;
            haveBest = true;
        }
    }
    if (inside) return GoldenRat(0);
    return best;
}

}  // namespace penrose
