// Exact arithmetic over the golden ring Z[phi] with power-of-two denominators,
// plus a full-field rational companion type used by the polygon clipper.
//
// GoldenReal holds (a + b*phi) / 2^k with arbitrary-precision integers a, b and
// a small non-negative exponent k, kept canonical (k == 0, or a, b not both
// even).  All comparisons are exact: the sign of a + b*phi is decided by an
// integer inequality against sqrt(5), never by floating point.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace penrose {

using BigInt = boost::multiprecision::cpp_int;

// Thrown by dec()/dec8() when the argument sits exactly on a cell boundary.
// The verification pipeline treats this as a hard error: every quantity fed
// through dec() is supposed to be interior, and a tie means the caller's
// premise is wrong, not that we should round one way or the other.
struct BoundaryTie : std::runtime_error {
    explicit BoundaryTie(const std::string& what) : std::runtime_error(what) {}
};

class GoldenReal {
public:
    GoldenReal() : a_(0), b_(0), k_(0) {}
    GoldenReal(long v) : a_(v), b_(0), k_(0) {}  // NOLINT: implicit on purpose
    GoldenReal(BigInt a, BigInt b, int k = 0) : a_(std::move(a)), b_(std::move(b)), k_(k) {
        if (k_ < 0) throw std::invalid_argument("GoldenReal: negative exponent");
        normalize();
    }

    static GoldenReal phi() { return GoldenReal(0, 1); }
    // (a + b*phi)/2 -- the natural unit of the half-integer tables.
    static GoldenReal half(long a, long b) { return GoldenReal(a, b, 1); }

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    int k() const { return k_; }

    bool isZero() const { return a_ == 0 && b_ == 0; }

    GoldenReal operator-() const { return GoldenReal(-a_, -b_, k_); }
    GoldenReal operator+(const GoldenReal& o) const;
    GoldenReal operator-(const GoldenReal& o) const { return *this + (-o); }
    GoldenReal operator*(const GoldenReal& o) const;
    GoldenReal& operator+=(const GoldenReal& o) { return *this = *this + o; }
    GoldenReal& operator-=(const GoldenReal& o) { return *this = *this - o; }
    GoldenReal& operator*=(const GoldenReal& o) { return *this = *this * o; }

    // Multiplication by phi and 1/phi are ring automorphism-free shortcuts:
    // (a + b phi) phi   = b + (a + b) phi
    // (a + b phi) / phi = (b - a) + a phi
    GoldenReal timesPhi() const { return GoldenReal(b_, a_ + b_, k_); }
    GoldenReal divPhi() const { return GoldenReal(b_ - a_, a_, k_); }
    // Multiply by phi^e for any integer e.
    GoldenReal timesPhiPow(int e) const;
    GoldenReal half() const { return GoldenReal(a_, b_, k_ + 1); }

    // Exact sign: -1, 0, +1.
    int sign() const;

    bool operator==(const GoldenReal& o) const { return (*this - o).isZero(); }
    bool operator!=(const GoldenReal& o) const { return !(*this == o); }
    bool operator<(const GoldenReal& o) const { return (*this - o).sign() < 0; }
    bool operator>(const GoldenReal& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const GoldenReal& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const GoldenReal& o) const { return (*this - o).sign() >= 0; }

    // Exact floor / nearest-integer reduction.
    BigInt floor() const;
    bool isInteger() const;

    // dec(x): the representative of x mod 1 in [-1/2, 1/2).  Throws
    // BoundaryTie when x is exactly half an odd integer.
    GoldenReal dec() const;
    // dec8(x) = 8 * dec(x/8): representative mod 8 in [-4, 4).
    GoldenReal dec8() const;

    double approx() const;

    // Text form "a b k", e.g. "-3 2 0" for phi^-3.
    std::string str() const;
    static GoldenReal parse(const std::string& text);

private:
    void normalize();

    BigInt a_, b_;
    int k_;
};

std::ostream& operator<<(std::ostream& os, const GoldenReal& g);

// interpolate(a, b) = a/phi + b/phi^2.  This is the convex combination used
// both for polygon edge probes and for the trace points of lifted tiles.
GoldenReal interpolate(const GoldenReal& a, const GoldenReal& b);

struct GoldenPoint {
    GoldenReal x, y;

    GoldenPoint() = default;
    GoldenPoint(GoldenReal px, GoldenReal py) : x(std::move(px)), y(std::move(py)) {}

    GoldenPoint operator+(const GoldenPoint& o) const { return {x + o.x, y + o.y}; }
    GoldenPoint operator-(const GoldenPoint& o) const { return {x - o.x, y - o.y}; }
    GoldenPoint operator-() const { return {-x, -y}; }
    bool operator==(const GoldenPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const GoldenPoint& o) const { return !(*this == o); }

    GoldenReal normSq() const { return x * x + y * y; }
};

GoldenPoint interpolate(const GoldenPoint& a, const GoldenPoint& b);

// cross(o->p, o->q): exact orientation predicate.
int orientation(const GoldenPoint& o, const GoldenPoint& p, const GoldenPoint& q);

// ---------------------------------------------------------------------------
// GoldenRat: the full field Q(phi), stored as (a + b*phi)/d with d > 0 and
// gcd(a, b, d) == 1.  Division is closed here, which is what the exact
// polygon-intersection routine and the gap measurements need.  GoldenReal
// embeds losslessly.
// ---------------------------------------------------------------------------

class GoldenRat {
public:
    GoldenRat() : a_(0), b_(0), d_(1) {}
    GoldenRat(long v) : a_(v), b_(0), d_(1) {}  // NOLINT: implicit on purpose
    GoldenRat(BigInt a, BigInt b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_ == 0) throw std::invalid_argument("GoldenRat: zero denominator");
        normalize();
    }
    GoldenRat(const GoldenReal& g);  // NOLINT: implicit embedding

    static GoldenRat phi() { return GoldenRat(0, 1, 1); }

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& d() const { return d_; }

    bool isZero() const { return a_ == 0 && b_ == 0; }

    GoldenRat operator-() const { return GoldenRat(-a_, -b_, d_); }
    GoldenRat operator+(const GoldenRat& o) const;
    GoldenRat operator-(const GoldenRat& o) const { return *this + (-o); }
    GoldenRat operator*(const GoldenRat& o) const;
    GoldenRat inverse() const;
    GoldenRat operator/(const GoldenRat& o) const { return *this * o.inverse(); }
    GoldenRat& operator+=(const GoldenRat& o) { return *this = *this + o; }
    GoldenRat& operator-=(const GoldenRat& o) { return *this = *this - o; }
    GoldenRat& operator*=(const GoldenRat& o) { return *this = *this * o; }
    GoldenRat& operator/=(const GoldenRat& o) { return *this = *this / o; }

    int sign() const;
    bool operator==(const GoldenRat& o) const { return (*this - o).isZero(); }
    bool operator!=(const GoldenRat& o) const { return !(*this == o); }
    bool operator<(const GoldenRat& o) const { return (*this - o).sign() < 0; }
    bool operator>(const GoldenRat& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const GoldenRat& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const GoldenRat& o) const { return (*this - o).sign() >= 0; }

    BigInt floor() const;
    // Representative of x mod 1 in [-1/2, 1/2); throws BoundaryTie on a tie.
    GoldenRat dec() const;

    // Exact conversion back to GoldenReal when the denominator is a power of
    // two; nullopt otherwise.
    std::optional<GoldenReal> toGoldenReal() const;

    double approx() const;

private:
    void normalize();

    BigInt a_, b_, d_;
};

struct RatPoint {
    GoldenRat x, y;

    RatPoint() = default;
    RatPoint(GoldenRat px, GoldenRat py) : x(std::move(px)), y(std::move(py)) {}
    RatPoint(const GoldenPoint& p) : x(p.x), y(p.y) {}  // NOLINT

    RatPoint operator+(const RatPoint& o) const { return {x + o.x, y + o.y}; }
    RatPoint operator-(const RatPoint& o) const { return {x - o.x, y - o.y}; }
    bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const RatPoint& o) const { return !(*this == o); }
};

int orientation(const RatPoint& o, const RatPoint& p, const RatPoint& q);

}  // namespace penrose
