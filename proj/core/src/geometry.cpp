#include "badgame/geometry.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "badgame/errors.hpp"

namespace badgame {

Square::Square(Quad x0_, Quad y0_, Quad side_)
    : x0(std::move(x0_)), y0(std::move(y0_)), side(std::move(side_)) {
  if (side.sign() <= 0) throw DomainError("square side must be positive");
}

Point Square::center() const {
  Quad half = side * Quad(Rational(1, 2));
  return {x0 + half, y0 + half};
}

bool HalfWidth::bounds(const Quad& d) const {
  if (d.sign() < 0) throw DomainError("distance must be nonnegative");
  // d^delta * q^sigma <= c^delta
  Quad lhs = d.pow(static_cast<unsigned long>(delta)) *
             Quad(Rational(pow_int(Integer(static_cast<long>(q)), static_cast<unsigned long>(sigma))));
  Quad rhs(pow_rat(c, static_cast<unsigned long>(delta)));
  return lhs <= rhs;
}

std::pair<Rational, Rational> HalfWidth::enclosure(unsigned bits) const {
  // a = floor(q^(sigma/delta) 2^bits), so q^(-sigma/delta) lies in [2^bits/(a+1), 2^bits/a].
  Integer scale = pow_int(2, bits);
  Quad y(Rational(pow_int(Integer(static_cast<long>(q)), static_cast<unsigned long>(sigma)) *
                  pow_int(scale, static_cast<unsigned long>(delta))));
  Integer a = greatest_root_at_most(y, delta);
  Rational lo = c * Rational(scale, a + 1);
  Rational hi = c * Rational(scale, a);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

double HalfWidth::approx() const {
  return c.get_d() * std::pow(static_cast<double>(q), -static_cast<double>(sigma) / static_cast<double>(delta));
}

Strip::Strip(std::int64_t A_, std::int64_t B_, std::int64_t C_, Quad width_)
    : A(A_), B(B_), C(C_), width(std::move(width_)) {
  if (A == 0 && B == 0) throw DomainError("strip direction must be nonzero");
  if (width.sign() <= 0) throw DomainError("strip width must be positive");
  std::int64_t g = std::gcd(std::gcd(A, B), C);
  A /= g;
  B /= g;
  C /= g;
  if (A < 0 || (A == 0 && B < 0)) {
    A = -A;
    B = -B;
    C = -C;
  }
}

Quad Strip::eval(const Quad& x, const Quad& y) const {
  return Quad(A) * x + Quad(B) * y + Quad(C);
}

Quad Strip::bound_squared() const {
  Quad half = width * Quad(Rational(1, 2));
  Rational norm2 = Rational(A) * A + Rational(B) * B;
  return half * half * Quad(norm2);
}

Disc::Disc(Quad cx_, Quad cy_, Quad radius_)
    : cx(std::move(cx_)), cy(std::move(cy_)), radius(std::move(radius_)) {
  if (radius.sign() <= 0) throw DomainError("disc radius must be positive");
}

Square inscribed_square(const Disc& d) {
  Quad side = Quad::sqrt2() * d.radius;
  Quad half = side * Quad(Rational(1, 2));
  return Square(d.cx - half, d.cy - half, side);
}

Square circumscribed_square(const Disc& d) {
  return Square(d.cx - d.radius, d.cy - d.radius, d.radius * Quad(2));
}

Disc inscribed_disc(const Square& s) {
  Point c = s.center();
  return Disc(c.x, c.y, s.side * Quad(Rational(1, 2)));
}

bool contains(const Square& outer, const Point& p) {
  return outer.x0 <= p.x && p.x <= outer.x1() && outer.y0 <= p.y && p.y <= outer.y1();
}

bool contains(const Rect& r, const Point& p) {
  return r.hx.bounds((p.x - Quad(r.cx)).abs()) && r.hy.bounds((p.y - Quad(r.cy)).abs());
}

bool contains(const Strip& s, const Point& p) {
  Quad v = s.eval(p.x, p.y);
  return v * v <= s.bound_squared();
}

bool contains(const Disc& d, const Point& p) {
  return distance_squared({d.cx, d.cy}, p) <= d.radius * d.radius;
}

bool contains(const Square& outer, const Square& inner) {
  return outer.x0 <= inner.x0 && inner.x1() <= outer.x1() && outer.y0 <= inner.y0 &&
         inner.y1() <= outer.y1();
}

bool contains(const Disc& outer, const Disc& inner) {
  Quad slack = outer.radius - inner.radius;
  if (slack.sign() < 0) return false;
  return distance_squared({outer.cx, outer.cy}, {inner.cx, inner.cy}) <= slack * slack;
}

bool contains(const Disc& outer, const Square& inner) {
  for (const Quad& x : {inner.x0, inner.x1()}) {
    for (const Quad& y : {inner.y0, inner.y1()}) {
      if (!contains(outer, Point{x, y})) return false;
    }
  }
  return true;
}

bool intersects(const Square& a, const Square& b) {
  return a.x0 <= b.x1() && b.x0 <= a.x1() && a.y0 <= b.y1() && b.y0 <= a.y1();
}

namespace {

// Distance from c to the interval [lo, hi].
Quad gap(const Quad& c, const Quad& lo, const Quad& hi) {
  if (c < lo) return lo - c;
  if (c > hi) return c - hi;
  return Quad(0);
}

}  // namespace

bool intersects(const Rect& r, const Square& s) {
  return r.hx.bounds(gap(Quad(r.cx), s.x0, s.x1())) && r.hy.bounds(gap(Quad(r.cy), s.y0, s.y1()));
}

bool intersects(const Strip& strip, const Square& s) {
  // Range of the linear form over the square is attained at corners.
  Quad fmin;
  Quad fmax;
  bool first = true;
  for (const Quad& x : {s.x0, s.x1()}) {
    for (const Quad& y : {s.y0, s.y1()}) {
      Quad v = strip.eval(x, y);
      if (first) {
        fmin = v;
        fmax = v;
        first = false;
      } else {
        if (v < fmin) fmin = v;
        if (v > fmax) fmax = v;
      }
    }
  }
  Quad w2 = strip.bound_squared();
  // [fmin, fmax] meets [-W, W] iff fmin <= W and fmax >= -W.
  bool below = fmin.sign() <= 0 || fmin * fmin <= w2;
  bool above = fmax.sign() >= 0 || fmax * fmax <= w2;
  return below && above;
}

bool contains(const Strip& strip, const Rect& r) {
  // max |f| over r = |f(center)| + |A| hx + |B| hy.
  Quad center_value = strip.eval(Quad(r.cx), Quad(r.cy)).abs();
  Quad w2 = strip.bound_squared();
  Rational a = std::abs(strip.A);
  Rational b = std::abs(strip.B);
  for (unsigned bits = 64; bits <= 4096; bits *= 2) {
    auto [xlo, xhi] = r.hx.enclosure(bits);
    auto [ylo, yhi] = r.hy.enclosure(bits);
    Quad upper = center_value + Quad(a * xhi + b * yhi);
    if (upper * upper <= w2) return true;
    Quad lower = center_value + Quad(a * xlo + b * ylo);
    if (lower * lower > w2) return false;
  }
  throw Error("strip containment undecided after refinement");
}

Quad distance_squared(const Point& a, const Point& b) {
  Quad dx = a.x - b.x;
  Quad dy = a.y - b.y;
  return dx * dx + dy * dy;
}

std::string describe(const Square& s) {
  return "square(x0=" + s.x0.to_string() + ", y0=" + s.y0.to_string() + ", side=" + s.side.to_string() + ")";
}

std::string describe(const Disc& d) {
  return "disc(center=(" + d.cx.to_string() + ", " + d.cy.to_string() + "), radius=" + d.radius.to_string() + ")";
}

}  // namespace badgame
