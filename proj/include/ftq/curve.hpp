#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ftq/abelian.hpp"

namespace ftq {

/// F_q with q = p^e <= 2^16.
///
/// Elements are encoded as integers 0..q-1 whose base-p digits are the
/// coefficients of a polynomial in the root t of a fixed primitive modulus
/// (digit i is the coefficient of t^i).  For e = 1 this is the usual 0..p-1.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  FiniteField(Int p, int e);
  /// q must be a prime power.
  static FiniteField of_order(Int q);

  Int p() const { return p_; }
  int e() const { return e_; }
  Int q() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool contains(Int x) const { return x >= 0 && x < q_; }

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, Int k) const;
  /// Image of an integer in the prime subfield.
  Elem from_int(Int n) const;

  Elem generator() const { return exp_[1 % (q_ - 1)]; }
  /// Monic primitive modulus, constant term first (length e + 1).
  const std::vector<Int>& modulus() const { return modulus_; }

 private:
  Int p_;
  int e_;
  Int q_;
  std::vector<Int> modulus_;
  std::vector<Elem> exp_;  // exp_[i] = t^i, i in [0, q-2]
  std::vector<std::uint32_t> log_;
};

/// Projective point on a short Weierstrass curve; infinity is the identity.
struct CurvePoint {
  bool infinity = true;
  FiniteField::Elem x = 0, y = 0;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(FiniteField::Elem x, FiniteField::Elem y) { return {false, x, y}; }
  auto operator<=>(const CurvePoint&) const = default;
};

/// y^2 = x^3 + a x + b over F; the field must outlive the curve.
class EllipticCurve {
 public:
  EllipticCurve(const FiniteField& field, FiniteField::Elem a, FiniteField::Elem b);

  const FiniteField& field() const { return *field_; }
  FiniteField::Elem a() const { return a_; }
  FiniteField::Elem b() const { return b_; }

  bool contains(const CurvePoint& pt) const;
  CurvePoint negate(const CurvePoint& pt) const;
  CurvePoint add(const CurvePoint& p1, const CurvePoint& p2) const;
  CurvePoint multiply(const CurvePoint& pt, Int k) const;

  /// All rational points, infinity first, then affine points by (x, y).
  std::vector<CurvePoint> points() const;
  /// Order of pt, given a multiple n of it (usually the group order).
  Int point_order(const CurvePoint& pt, Int n) const;

 private:
  const FiniteField* field_;
  FiniteField::Elem a_, b_;
};

/// Group of rational points (including infinity) as Z/d1 + Z/d2, d1 | d2.
FinGenAbGroup count_and_structure_elliptic(const EllipticCurve& e);

bool within_hasse_bound(Int point_count, Int q);

/// Number of closed points of degree d on the projective line over F_q.
Int closed_points_p1(Int q, Int d);

struct P1Minus {
  std::vector<Int> puncture_degrees;
};

/// Short Weierstrass coefficients in the field encoding; the removed point is infinity.
struct EllipticMinusPoint {
  Int a = 0, b = 0;
};

using CurveSpec = std::variant<P1Minus, EllipticMinusPoint>;

std::size_t puncture_count(const CurveSpec& c);
std::string describe(const CurveSpec& c);

struct PicardData {
  FinGenAbGroup group;
  Involution iota{GroupHom{}};
  std::vector<std::string> element_labels;  // indexed like group.elements(); may be empty
};

PicardData pic_p1_minus(const std::vector<Int>& degrees);
PicardData pic_elliptic_minus_point(const EllipticCurve& e);
PicardData picard(const CurveSpec& c, const FiniteField& f);

struct PicardClass {
  std::vector<Element> members;
  bool self_inverse = false;
};

/// Orbits of the inversion involution on Pic.
std::vector<PicardClass> component_classes(const PicardData& pic);

}  // namespace ftq
