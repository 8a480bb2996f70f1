#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "badgame/exponents.hpp"
#include "badgame/quad.hpp"

namespace badgame {

struct Point {
  Quad x;
  Quad y;
};

/// Closed axis-aligned square [x0, x0+side] x [y0, y0+side].
struct Square {
  Quad x0;
  Quad y0;
  Quad side;

  Square(Quad x0_, Quad y0_, Quad side_);

  Quad x1() const { return x0 + side; }
  Quad y1() const { return y0 + side; }
  Point center() const;
};

/// Half-width c * q^(-sigma/delta), kept symbolic so that membership stays
/// exact for irrational exponents.
struct HalfWidth {
  Rational c;
  std::int64_t q = 1;
  std::int64_t sigma = 0;
  std::int64_t delta = 1;

  // Exact test d <= c * q^(-sigma/delta) for d >= 0.
  bool bounds(const Quad& d) const;
  // Rational enclosure [lo, hi] of the half-width with relative width about 2^-bits.
  std::pair<Rational, Rational> enclosure(unsigned bits) const;
  double approx() const;
};

/// Closed rectangle centered at a rational point with symbolic half-widths.
struct Rect {
  Rational cx;
  Rational cy;
  HalfWidth hx;
  HalfWidth hy;
};

/// Closed strip {(x,y) : |Ax+By+C| <= (width/2) sqrt(A^2+B^2)} around the
/// rational line Ax+By+C = 0.
struct Strip {
  std::int64_t A;
  std::int64_t B;
  std::int64_t C;
  Quad width;

  // Normalizes gcd(A,B,C) = 1 with the first nonzero of (A,B) positive.
  Strip(std::int64_t A_, std::int64_t B_, std::int64_t C_, Quad width_);

  // Value of Ax+By+C.
  Quad eval(const Quad& x, const Quad& y) const;
  // (width/2)^2 (A^2+B^2): the squared bound on |Ax+By+C|.
  Quad bound_squared() const;
};

struct Disc {
  Quad cx;
  Quad cy;
  Quad radius;

  Disc(Quad cx_, Quad cy_, Quad radius_);
};

Square inscribed_square(const Disc& d);
Square circumscribed_square(const Disc& d);
Disc inscribed_disc(const Square& s);

bool contains(const Square& outer, const Point& p);
bool contains(const Rect& r, const Point& p);
bool contains(const Strip& s, const Point& p);
bool contains(const Disc& d, const Point& p);

bool contains(const Square& outer, const Square& inner);
bool contains(const Disc& outer, const Disc& inner);
bool contains(const Disc& outer, const Square& inner);

bool intersects(const Square& a, const Square& b);
bool intersects(const Rect& r, const Square& s);
bool intersects(const Strip& strip, const Square& s);

/// Exact test Rect subset of Strip. The rectangle corners are irrational in
/// general, so the decision refines rational enclosures of the half-widths
/// until it separates (equality with the boundary is detected separately).
bool contains(const Strip& strip, const Rect& r);

/// Squared Euclidean distance between two points.
Quad distance_squared(const Point& a, const Point& b);

std::string describe(const Square& s);
std::string describe(const Disc& d);

}  // namespace badgame
