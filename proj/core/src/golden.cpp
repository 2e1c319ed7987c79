#include "penrose/golden.hpp"

#include <boost/multiprecision/integer.hpp>

#include <ostream>
#include <sstream>

namespace penrose {

namespace {

// sign of p/q - phi for integers p, q with q > 0.  Never zero (phi is
// irrational): p/q < phi  <=>  2p - q < sqrt(5) q  <=>  2p - q < 0, or
// (2p - q)^2 < 5 q^2.
int cmpRatioPhi(const BigInt& p, const BigInt& q) {
    BigInt t = 2 * p - q;
    if (t < 0) return -1;
    return (t * t < 5 * q * q) ? -1 : 1;
}

// sign of a + b*sqrt5-ish combination a + b*phi with plain integers.
int signIntPhi(const BigInt& a, const BigInt& b) {
    if (b == 0) return a == 0 ? 0 : (a > 0 ? 1 : -1);
    if (b > 0) {
        // a + b*phi > 0  <=>  -a/b < phi.
        return cmpRatioPhi(-a, b) < 0 ? 1 : -1;
    }
    return -signIntPhi(-a, -b);
}

// floor((a + b*phi) / den) for den > 0, exact.  Uses the integer square root
// of 5 b^2 to bracket b*sqrt(5), then fixes up with exact sign tests.
BigInt floorIntPhi(const BigInt& a, const BigInt& b, const BigInt& den) {
    // a + b*phi = (2a + b + b*sqrt5) / 2.
    BigInt num2 = 2 * a + b;  // the rational part of twice the value
    BigInt s = boost::multiprecision::sqrt(BigInt(5 * b * b));  // s <= |b|sqrt5 < s+1
    BigInt lo;  // lower bound for 2*(a + b*phi)
    if (b >= 0) {
        lo = num2 + s;
    } else {
        lo = num2 - s - 1;
    }
    // candidate floor of value/den
    BigInt n = lo / (2 * den);
    if (lo < 0 && lo % (2 * den) != 0) --n;
    // fix up: want  n <= x/den < n+1,  i.e. sign(a - n*den + b*phi) >= 0 and
    // sign(a - (n+1)*den + b*phi) < 0.
    while (signIntPhi(a - n * den, b) < 0) --n;
    while (signIntPhi(a - (n + 1) * den, b) >= 0) ++n;
    return n;
}

}  // namespace

// --------------------------------------------------------------------------
// GoldenReal
// --------------------------------------------------------------------------

void GoldenReal::normalize() {
    while (k_ > 0 && (a_ & 1) == 0 && (b_ & 1) == 0) {
        a_ >>= 1;
        b_ >>= 1;
        --k_;
    }
    if (a_ == 0 && b_ == 0) k_ = 0;
}

GoldenReal GoldenReal::operator+(const GoldenReal& o) const {
    if (k_ == o.k_) return GoldenReal(a_ + o.a_, b_ + o.b_, k_);
    if (k_ > o.k_) {
        int shift = k_ - o.k_;
        return GoldenReal(a_ + (o.a_ << shift), b_ + (o.b_ << shift), k_);
    }
    int shift = o.k_ - k_;
    return GoldenReal((a_ << shift) + o.a_, (b_ << shift) + o.b_, o.k_);
}

GoldenReal GoldenReal::operator*(const GoldenReal& o) const {
    // (a1 + b1 phi)(a2 + b2 phi) with phi^2 = phi + 1.
    BigInt bb = b_ * o.b_;
    return GoldenReal(a_ * o.a_ + bb, a_ * o.b_ + b_ * o.a_ + bb, k_ + o.k_);
}

GoldenReal GoldenReal::timesPhiPow(int e) const {
    GoldenReal r = *this;
    for (; e > 0; --e) r = r.timesPhi();
    for (; e < 0; ++e) r = r.divPhi();
    return r;
}

int GoldenReal::sign() const { return signIntPhi(a_, b_); }

BigInt GoldenReal::floor() const {
    return floorIntPhi(a_, b_, BigInt(1) << k_);
}

bool GoldenReal::isInteger() const {
    return k_ == 0 && b_ == 0;
}

GoldenReal GoldenReal::dec() const {
    // n = floor(x + 1/2); tie when x + 1/2 is an integer.
    GoldenReal shifted = *this + GoldenReal(1, 0, 1);
    BigInt n = shifted.floor();
    if (shifted == GoldenReal(n, 0)) {
        throw BoundaryTie("dec: argument is exactly half an odd integer: " + str());
    }
    return *this - GoldenReal(n, 0);
}

GoldenReal GoldenReal::dec8() const {
    // 8 * dec(x/8); dividing by 8 just bumps the exponent.
    GoldenReal r = GoldenReal(a_, b_, k_ + 3).dec();
    return GoldenReal(r.a() * 8, r.b() * 8, r.k());
}

double GoldenReal::approx() const {
    static const double kPhi = 1.6180339887498948482;
    double v = a_.convert_to<double>() + b_.convert_to<double>() * kPhi;
    return std::ldexp(v, -k_);
}

std::string GoldenReal::str() const {
    std::ostringstream os;
    os << a_ << ' ' << b_ << ' ' << k_;
    return os.str();
}

GoldenReal GoldenReal::parse(const std::string& text) {
    std::istringstream is(text);
    BigInt a, b;
    int k;
    if (!(is >> a >> b >> k) || k < 0) {
        throw std::invalid_argument("GoldenReal::parse: bad input '" + text + "'");
    }
    std::string rest;
    if (is >> rest) {
        throw std::invalid_argument("GoldenReal::parse: trailing junk in '" + text + "'");
    }
    return GoldenReal(a, b, k);
}

std::ostream& operator<<(std::ostream& os, const GoldenReal& g) {
    return os << g.str();
}

GoldenReal interpolate(const GoldenReal& a, const GoldenReal& b) {
    return a.divPhi() + b.divPhi().divPhi();
}

GoldenPoint interpolate(const GoldenPoint& a, const GoldenPoint& b) {
    return {interpolate(a.x, b.x), interpolate(a.y, b.y)};
}

int orientation(const GoldenPoint& o, const GoldenPoint& p, const GoldenPoint& q) {
    GoldenReal cross = (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
    return cross.sign();
}

// --------------------------------------------------------------------------
// GoldenRat
// --------------------------------------------------------------------------

GoldenRat::GoldenRat(const GoldenReal& g) : a_(g.a()), b_(g.b()), d_(BigInt(1) << g.k()) {}

void GoldenRat::normalize() {
    if (d_ < 0) {
        a_ = -a_;
        b_ = -b_;
        d_ = -d_;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(a_, b_), d_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        d_ /= g;
    }
}

GoldenRat GoldenRat::operator+(const GoldenRat& o) const {
    return GoldenRat(a_ * o.d_ + o.a_ * d_, b_ * o.d_ + o.b_ * d_, d_ * o.d_);
}

GoldenRat GoldenRat::operator*(const GoldenRat& o) const {
    BigInt bb = b_ * o.b_;
    return GoldenRat(a_ * o.a_ + bb, a_ * o.b_ + b_ * o.a_ + bb, d_ * o.d_);
}

GoldenRat GoldenRat::inverse() const {
    // 1 / (a + b phi) = (a + b - b phi) / (a^2 + a b - b^2).
    BigInt norm = a_ * a_ + a_ * b_ - b_ * b_;
    if (norm == 0) throw std::domain_error("GoldenRat::inverse: zero");
    return GoldenRat(d_ * (a_ + b_), d_ * (-b_), norm);
}

int GoldenRat::sign() const { return signIntPhi(a_, b_); }

BigInt GoldenRat::floor() const { return floorIntPhi(a_, b_, d_); }

GoldenRat GoldenRat::dec() const {
    GoldenRat shifted = *this + GoldenRat(1, 0, 2);
    BigInt n = shifted.floor();
    if (shifted == GoldenRat(n, 0, 1)) {
        throw BoundaryTie("GoldenRat::dec: boundary tie");
    }
    return *this - GoldenRat(n, 0, 1);
}

std::optional<GoldenReal> GoldenRat::toGoldenReal() const {
    BigInt d = d_;
    int k = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++k;
    }
    if (d != 1) return std::nullopt;
    return GoldenReal(a_, b_, k);
}

double GoldenRat::approx() const {
    static const double kPhi = 1.6180339887498948482;
    return (a_.convert_to<double>() + b_.convert_to<double>() * kPhi) / d_.convert_to<double>();
}

int orientation(const RatPoint& o, const RatPoint& p, const RatPoint& q) {
    GoldenRat cross = (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
    return cross.sign();
}

}  // namespace penrose
