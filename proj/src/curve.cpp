#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ftq/curve.hpp"

namespace ftq {

using Elem = FiniteField::Elem;

EllipticCurve::EllipticCurve(const FiniteField& field, Elem a, Elem b) : field_(&field), a_(a), b_(b) {
  if (!field.contains(a) || !field.contains(b)) throw std::invalid_argument("curve coefficients outside the field");
  if (field.p() == 2) throw std::invalid_argument("short Weierstrass model y^2 = x^3 + ax + b is singular in characteristic 2");
  const FiniteField& F = field;
  // 4a^3 + 27b^2
  const Elem disc = F.add(F.mul(F.from_int(4), F.pow(a, 3)), F.mul(F.from_int(27), F.mul(b, b)));
  if (disc == 0) throw std::invalid_argument("singular curve: 4a^3 + 27b^2 = 0");
}

bool EllipticCurve::contains(const CurvePoint& pt) const {
  if (pt.infinity) return true;
  const FiniteField& F = *field_;
  const Elem lhs = F.mul(pt.y, pt.y);
  const Elem rhs = F.add(F.add(F.pow(pt.x, 3), F.mul(a_, pt.x)), b_);
  return lhs == rhs;
}

CurvePoint EllipticCurve::negate(const CurvePoint& pt) const {
  if (pt.infinity) return pt;
  return CurvePoint::affine(pt.x, field_->neg(pt.y));
}

CurvePoint EllipticCurve::add(const CurvePoint& p1, const CurvePoint& p2) const {
  if (p1.infinity) return p2;
  if (p2.infinity) return p1;
  const FiniteField& F = *field_;
  Elem lambda;
  if (p1.x == p2.x) {
    if (F.add(p1.y, p2.y) == 0) return CurvePoint::at_infinity();
    // tangent: (3x^2 + a) / 2y
    lambda = F.div(F.add(F.mul(F.from_int(3), F.mul(p1.x, p1.x)), a_), F.mul(F.from_int(2), p1.y));
  } else {
    lambda = F.div(F.sub(p2.y, p1.y), F.sub(p2.x, p1.x));
  }
  const Elem x3 = F.sub(F.sub(F.mul(lambda, lambda), p1.x), p2.x);
  const Elem y3 = F.sub(F.mul(lambda, F.sub(p1.x, x3)), p1.y);
  return CurvePoint::affine(x3, y3);
}

CurvePoint EllipticCurve::multiply(const CurvePoint& pt, Int k) const {
  CurvePoint base = k < 0 ? negate(pt) : pt;
  if (k < 0) k = -k;
  CurvePoint acc = CurvePoint::at_infinity();
  while (k > 0) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

std::vector<CurvePoint> EllipticCurve::points() const {
  const FiniteField& F = *field_;
  const auto q = static_cast<std::size_t>(F.q());
  std::vector<std::vector<Elem>> roots(q);
  for (Elem y = 0; y < q; ++y) roots[F.mul(y, y)].push_back(y);

  std::vector<CurvePoint> out{CurvePoint::at_infinity()};
  for (Elem x = 0; x < q; ++x) {
    const Elem rhs = F.add(F.add(F.pow(x, 3), F.mul(a_, x)), b_);
    for (Elem y : roots[rhs]) out.push_back(CurvePoint::affine(x, y));
  }
  return out;
}

Int EllipticCurve::point_order(const CurvePoint& pt, Int n) const {
  if (!multiply(pt, n).infinity) throw std::invalid_argument("point order does not divide the given multiple");
  Int ord = n;
  for (Int p : prime_divisors(n))
    while (ord % p == 0 && multiply(pt, ord / p).infinity) ord /= p;
  return ord;
}

FinGenAbGroup count_and_structure_elliptic(const EllipticCurve& e) {
  const std::vector<CurvePoint> pts = e.points();
  const auto n = static_cast<Int>(pts.size());
  Int exponent = 1;
  for (const CurvePoint& pt : pts) exponent = std::max(exponent, e.point_order(pt, n));
  const Int d2 = exponent;
  const Int d1 = n / d2;
  if (n % d2 != 0 || d2 % d1 != 0) throw std::logic_error("point group is not of the form Z/d1 + Z/d2");
  const auto torsion = std::count_if(pts.begin(), pts.end(), [&](const CurvePoint& pt) { return e.multiply(pt, d1).infinity; });
  if (torsion != d1 * d1) throw std::logic_error("d1-torsion count disagrees with Z/d1 + Z/d2");

  std::vector<Int> factors;
  if (d1 >= 2) factors.push_back(d1);
  if (d2 >= 2) factors.push_back(d2);
  return FinGenAbGroup(0, std::move(factors));
}

bool within_hasse_bound(Int point_count, Int q) {
  const Int t = point_count - (q + 1);
  return t * t <= 4 * q;
}

Int closed_points_p1(Int q, Int d) {
  if (d < 1) throw std::invalid_argument("closed point degree must be >= 1");
  if (d == 1) return q + 1;
  // Moebius inversion over the divisors of d.
  auto mobius = [](Int n) {
    int sign = 1;
    for (Int p : prime_divisors(n)) {
      if ((n / p) % p == 0) return 0;
      sign = -sign;
    }
    return sign;
  };
  Int sum = 0;
  for (Int k = 1; k <= d; ++k) {
    if (d % k != 0) continue;
    Int qk = 1;
    for (Int i = 0; i < k; ++i) qk = checked_mul(qk, q);
    sum = checked_add(sum, checked_mul(mobius(d / k), qk));
  }
  return sum / d;
}

std::size_t puncture_count(const CurveSpec& c) {
  if (const auto* p = std::get_if<P1Minus>(&c)) return p->puncture_degrees.size();
  return 1;
}

std::string describe(const CurveSpec& c) {
  std::ostringstream os;
  if (const auto* p = std::get_if<P1Minus>(&c)) {
    os << "P1 minus " << p->puncture_degrees.size() << " closed points of degrees ";
    for (std::size_t i = 0; i < p->puncture_degrees.size(); ++i) os << (i ? "," : "") << p->puncture_degrees[i];
  } else {
    const auto& e = std::get<EllipticMinusPoint>(c);
    os << "y^2 = x^3 + " << e.a << "x + " << e.b << " minus infinity";
  }
  return os.str();
}

PicardData pic_p1_minus(const std::vector<Int>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("P1 minus points needs at least one puncture");
  Int g = 0;
  for (Int d : degrees) {
    if (d < 1) throw std::invalid_argument("puncture degrees must be positive");
    g = std::gcd(g, d);
  }
  PicardData pic;
  pic.group = FinGenAbGroup::cyclic(g);
  pic.iota = Involution::negation(pic.group);
  for (Int k = 0; k < g; ++k) pic.element_labels.push_back("O(" + std::to_string(k) + ")");
  return pic;
}

PicardData pic_elliptic_minus_point(const EllipticCurve& e) {
  PicardData pic;
  pic.group = count_and_structure_elliptic(e);
  pic.iota = Involution::negation(pic.group);
  return pic;
}

PicardData picard(const CurveSpec& c, const FiniteField& f) {
  if (const auto* p = std::get_if<P1Minus>(&c)) return pic_p1_minus(p->puncture_degrees);
  const auto& em = std::get<EllipticMinusPoint>(c);
  if (!f.contains(em.a) || !f.contains(em.b)) throw std::invalid_argument("curve coefficients outside F_" + std::to_string(f.q()));
  const EllipticCurve e(f, static_cast<Elem>(em.a), static_cast<Elem>(em.b));
  return pic_elliptic_minus_point(e);
}

std::vector<PicardClass> component_classes(const PicardData& pic) {
  std::vector<PicardClass> out;
  for (auto& o : involution_orbits(pic.group, pic.iota)) out.push_back({std::move(o.members), o.fixed});
  return out;
}

}  // namespace ftq
