#include "penrose/orbit.hpp"

#include "penrose/inflation.hpp"

#include <algorithm>
#include <stdexcept>

namespace penrose {

namespace {

const GoldenReal kA(-3, 2);           // phi^-3
const GoldenReal kTwoPhiInv3(-6, 4);  // 2 phi^-3, the window length
const GoldenReal kTwoPhiInv6(26, -16);

}  // namespace

long codeValue(const std::string& beta) {
    long n = 0;
    for (char c : beta) {
        if (c != '0' && c != '1') throw std::invalid_argument("codeValue: not a binary string");
        n = 2 * n + (c - '0');
    }
    return n;
}

int codeNu(const std::string& beta) {
    int nu = 0;
    for (auto it = beta.rbegin(); it != beta.rend() && *it == '0'; ++it) ++nu;
    return nu;
}

int nuOf(long n) {
    if (n <= 0) throw std::invalid_argument("nuOf: needs n >= 1");
    int nu = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++nu;
    }
    return nu;
}

std::string codeOf(long n, int len) {
    std::string s;
    for (long m = n; m > 0; m /= 2) s.push_back(char('0' + m % 2));
    while ((int)s.size() < std::max(len, 1)) s.push_back('0');
    std::reverse(s.begin(), s.end());
    return s;
}

GoldenReal heightV(long x, long y) { return kA * GoldenReal(x) + GoldenReal(y); }

bool isBasepoint(long x, long y) {
    GoldenReal t = fundamentalT(x, y);
    return t.sign() > 0 && t < kTwoPhiInv3;
}

GoldenPoint CantorCells::applyGamma(int j, const GoldenPoint& z) const {
    GoldenPoint w{-(kA * (z.x - fixedPoint.x)) + fixedPoint.x,
                  -(kA * (z.y - fixedPoint.y)) + fixedPoint.y};
    if (j == 1) w = w - V0;
    return w;
}

ConvexPolygon CantorCells::cell(const std::string& beta) const {
    ConvexPolygon out = K;
    for (char c : beta) {
        if (c != '0' && c != '1') throw std::invalid_argument("cell: not a binary string");
        for (auto& v : out.v) v = applyGamma(c - '0', v);
    }
    out.normalize();
    return out;
}

CantorCells cantorContractions(const PolygonSet& partition) {
    CantorCells cells;
    cells.fixedPoint = canonicalPsi({0, 0}, partition.poly[3]);
    // (phi^-4 - phi^-7, phi^-3 - phi^-6)
    cells.V0 = GoldenPoint{GoldenReal(5, -3) - GoldenReal(-21, 13),
                           GoldenReal(-3, 2) - GoldenReal(13, -8)};
    cells.K.v = partition.raw[3];
    cells.K.normalize();
    return cells;
}

std::vector<Basepoint> enumerateBasepoints(const std::vector<LatticePoint>& backwardTrace) {
    std::vector<Basepoint> out;
    for (std::size_t i = 0; i < backwardTrace.size(); ++i) {
        const auto& p = backwardTrace[i];
        if (isBasepoint(p.first, p.second)) {
            out.push_back({(long)out.size(), (long)i, p});
        }
    }
    return out;
}

bool basepointInCells(const CantorCells& cells, const Basepoint& bp, int maxLen) {
    GoldenPoint psi = psiLiftReduced(bp.X.first, bp.X.second);
    int minLen = 0;
    for (long m = bp.n; m > 0; m /= 2) ++minLen;
    for (int len = std::max(minLen, 1); len <= maxLen; ++len) {
        if (!latticeContainsClosed(cells.cell(codeOf(bp.n, len)), psi, 3)) return false;
    }
    return true;
}

GapReport gapCheck(const PolygonSet& partition, const std::vector<LatticePoint>& trace,
                   int samples) {
    GapReport rep;
    const ConvexPolygon& K = partition.poly[3];
    RatPolygon Krat = RatPolygon::from(K);
    const GoldenRat threshold(1, 0, 100000000);  // (10^-4)^2
    const GoldenRat half(1, 0, 2);
    const GoldenRat phiInvHalf(-1, 1, 2);  // 1/(2 phi)

    bool first = true;
    rep.psiImagesClear = true;
    for (int i = 0; i < samples; ++i) {
        // x = 2 + 14 i / (samples - 1), endpoints included
        GoldenRat x(2 * (samples - 1) + 14 * (long)i, 0, samples - 1);
        GoldenRat cx = x * phiInvHalf;
        GoldenRat cy = x * half;
        cx -= GoldenRat(cx.floor(), 0, 1);
        cy -= GoldenRat(cy.floor(), 0, 1);
        GoldenRat best;
        bool haveBest = false;
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                GoldenRat d = distanceSq(Krat, RatPoint{cx - GoldenRat(dx), cy - GoldenRat(dy)});
                if (!haveBest || d < best) {
                    best = d;
                    haveBest = true;
                }
            }
        }
        if (best <= threshold) rep.psiImagesClear = false;
        if (first || best < rep.minDistSq) {
            rep.minDistSq = best;
            first = false;
        }
        ++rep.pointsChecked;
    }

    // Height-gap corollary: no type-3 vertex of the trace has v in [phi^-3, 7).
    rep.heightGapOk = true;
    const GoldenReal seven(7);
    for (const auto& p : trace) {
        if (classify(partition, p.first, p.second) != 3) continue;
        ++rep.type3Checked;
        GoldenReal v = heightV(p.first, p.second);
        if (v >= kA && v < seven) rep.heightGapOk = false;
    }

    // psi([0, 2 phi^-3]) is the long diagonal of K: its endpoints are the
    // opposite corner vertices (0,0) and (phi^-4, phi^-3), and its midpoint
    // image lies strictly inside.
    GoldenPoint end0{GoldenReal(0), GoldenReal(0)};
    GoldenPoint end1{GoldenReal(5, -3), GoldenReal(-3, 2)};
    auto isVertex = [&](const GoldenPoint& p) {
        for (const auto& v : partition.raw[3]) {
            if (v == p) return true;
        }
        return false;
    };
    GoldenPoint mid{GoldenReal(5, -3, 1), GoldenReal(-3, 2, 1)};  // psi(phi^-3)
    rep.diagonalOk = isVertex(end0) && isVertex(end1) && containsOpen(K, mid);

    return rep;
}

bool descentExcludes(const GoldenReal& x0, int* iterations) {
    const GoldenReal rightLo = kTwoPhiInv3 - kTwoPhiInv6;
    GoldenReal x = x0;
    for (int it = 0; it < 1000; ++it) {
        if (iterations) *iterations = it;
        if (x.sign() <= 0 || x >= kTwoPhiInv3) return true;  // outside the window
        if (x <= kTwoPhiInv6) {
            x = x.timesPhiPow(3);  // expand the left copy
        } else if (x >= rightLo) {
            x = GoldenReal(2) - x.timesPhiPow(3);  // expand the right copy
        } else {
            return true;  // inside the middle gap
        }
    }
    return false;
}

DescentReport descentCheck(long bound) {
    DescentReport rep;
    for (long a = -bound; a <= bound; a += 2) {
        for (long b = -bound; b <= bound; b += 2) {
            ++rep.pairsTested;
            GoldenReal x(a, b);
            if (x.sign() > 0 && x < kTwoPhiInv3) ++rep.windowHits;
            int iters = 0;
            if (!descentExcludes(x, &iters)) ++rep.survivors;
            rep.maxIterations = std::max(rep.maxIterations, (long)iters);
        }
    }
    return rep;
}

std::vector<Excursion> risingProfile(const std::vector<LatticePoint>& backwardTrace,
                                     const std::vector<LatticePoint>& forwardTrace) {
    std::vector<Basepoint> bps = enumerateBasepoints(backwardTrace);
    std::vector<Excursion> out;
    for (std::size_t n = 1; n < bps.size(); ++n) {
        Excursion e;
        e.n = (long)n;
        e.nu = nuOf((long)n);
        e.steps = bps[n].step - bps[n - 1].step;
        for (long s = bps[n - 1].step; s <= bps[n].step; ++s) {
            GoldenReal v = heightV(backwardTrace[s].first, backwardTrace[s].second);
            if (s == bps[n - 1].step || v > e.height) e.height = v;
        }
        // The strand leaving X_n (towards the origin) repeats the strand
        // leaving the origin for a while; count the matching edges.
        long s0 = bps[n].step;
        long match = 0;
        while (match + 1 < (long)forwardTrace.size() && s0 - match - 1 >= 0) {
            long ex = forwardTrace[match + 1].first - forwardTrace[match].first;
            long ey = forwardTrace[match + 1].second - forwardTrace[match].second;
            long bx = backwardTrace[s0 - match - 1].first - backwardTrace[s0 - match].first;
            long by = backwardTrace[s0 - match - 1].second - backwardTrace[s0 - match].second;
            if (ex != bx || ey != by) break;
            ++match;
        }
        e.prefixMatch = match;
        out.push_back(e);
    }
    return out;
}

}  // namespace penrose
