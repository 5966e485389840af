#include <algorithm>
#include <map>
#include <sstream>

#include "ftq/arithdata.hpp"

namespace ftq {

namespace {

// Move b into (-a, a] by x -> x + r y.
QuadraticForm normalize(QuadraticForm f) {
  const Int two_a = checked_mul(2, f.a);
  const Int r = div_floor(checked_sub(f.a, f.b), two_a);
  const Int b = checked_add(f.b, checked_mul(two_a, r));
  const Int c = checked_add(checked_add(checked_mul(checked_mul(f.a, r), r), checked_mul(f.b, r)), f.c);
  return {f.a, b, c};
}

bool squarefree(Int n) {
  if (n < 0) n = -n;
  for (Int p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace

bool QuadraticForm::is_reduced() const {
  const Int abs_b = b < 0 ? -b : b;
  if (!(abs_b <= a && a <= c)) return false;
  if ((abs_b == a || a == c) && b < 0) return false;
  return true;
}

std::string QuadraticForm::to_string() const {
  std::ostringstream os;
  os << '(' << a << ',' << b << ',' << c << ')';
  return os.str();
}

QuadraticForm reduce(QuadraticForm f) {
  if (!f.is_positive_definite()) throw std::invalid_argument("reduce expects a positive definite form, got " + f.to_string());
  f = normalize(f);
  while (f.a > f.c) {
    f = normalize({f.c, -f.b, f.a});
  }
  if (f.a == f.c && f.b < 0) f.b = -f.b;
  return f;
}

QuadraticForm principal_form(Int d) {
  if (d >= 0 || mod_floor(d, 4) > 1) throw std::invalid_argument("not a negative discriminant: " + std::to_string(d));
  const Int b = mod_floor(d, 2);
  return {1, b, (b * b - d) / 4};
}

QuadraticForm compose(const QuadraticForm& f, const QuadraticForm& g) {
  const Int d = f.discriminant();
  if (g.discriminant() != d) throw std::invalid_argument("composition of forms with different discriminants");
  QuadraticForm f1 = f, f2 = g;
  if (f1.a > f2.a) std::swap(f1, f2);
  const Int s = (f1.b + f2.b) / 2;
  const Int n = f2.b - s;

  Int y1, g1;
  if (f2.a % f1.a == 0) {
    y1 = 0;
    g1 = f1.a;
  } else {
    Int u, v;
    g1 = extended_gcd(f2.a, f1.a, u, v);
    y1 = u;
  }

  Int x2, y2, d1;
  if (s % g1 == 0) {
    y2 = -1;
    x2 = 0;
    d1 = g1;
  } else {
    Int u, v;
    d1 = extended_gcd(s, g1, u, v);
    x2 = u;
    y2 = -v;
  }

  const Int v1 = f1.a / d1;
  const Int v2 = f2.a / d1;
  const Int r = mod_floor(checked_sub(checked_mul(checked_mul(y1, y2), n), checked_mul(x2, f2.c)), v1);
  const Int b3 = checked_add(f2.b, checked_mul(checked_mul(2, v2), r));
  const Int a3 = checked_mul(v1, v2);
  const Int num = checked_sub(checked_mul(b3, b3), d);
  if (num % checked_mul(4, a3) != 0) throw std::logic_error("composition produced a non-integral form");
  return reduce({a3, b3, num / (4 * a3)});
}

QuadraticForm inverse(const QuadraticForm& f) { return reduce({f.a, -f.b, f.c}); }

bool is_fundamental_discriminant(Int d) {
  if (d == 0 || d == 1) return false;
  const Int r = mod_floor(d, 4);
  if (r == 1) return squarefree(d);
  if (r == 0) {
    const Int m = d / 4;
    const Int rm = mod_floor(m, 4);
    return (rm == 2 || rm == 3) && squarefree(m);
  }
  return false;
}

std::vector<QuadraticForm> reduced_forms(Int d) {
  if (d >= 0 || mod_floor(d, 4) > 1) throw std::invalid_argument("not a negative discriminant: " + std::to_string(d));
  std::vector<QuadraticForm> out;
  const Int abs_d = -d;
  for (Int a = 1; 3 * a * a <= abs_d; ++a)
    for (Int b = -a; b <= a; ++b) {
      if (mod_floor(b - d, 2) != 0) continue;
      const Int num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const QuadraticForm f{a, b, num / (4 * a)};
      if (!f.is_reduced()) continue;
      if (gcd(gcd(f.a, f.b), f.c) != 1) continue;
      out.push_back(f);
    }
  std::sort(out.begin(), out.end());
  return out;
}

FormClassGroup form_class_group(Int d) {
  if (d >= 0) throw std::invalid_argument("discriminant must be negative, got " + std::to_string(d));
  if (!is_fundamental_discriminant(d)) throw std::invalid_argument("not a fundamental discriminant: " + std::to_string(d));

  FormClassGroup out;
  out.discriminant = d;
  out.forms = reduced_forms(d);
  const std::size_t h = out.forms.size();
  std::map<QuadraticForm, std::size_t> index;
  for (std::size_t i = 0; i < h; ++i) index.emplace(out.forms[i], i);

  out.table.assign(h, std::vector<std::size_t>(h));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i; j < h; ++j) {
      const auto it = index.find(compose(out.forms[i], out.forms[j]));
      if (it == index.end()) throw std::logic_error("composition left the set of reduced forms");
      out.table[i][j] = out.table[j][i] = it->second;
    }

  // Greedy generating set: add a form whenever it lies outside the span so far.
  std::vector<std::size_t> gens;
  std::vector<bool> reached(h, false);
  reached[0] = true;
  for (std::size_t g = 1; g < h; ++g) {
    if (reached[g]) continue;
    gens.push_back(g);
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t x = 0; x < h; ++x)
        if (reached[x])
          for (std::size_t s : gens)
            if (!reached[out.table[s][x]]) reached[out.table[s][x]] = grew = true;
    }
  }

  // Free abelian group on the forms modulo [principal] = 0 and [g] + [x] = [gx]
  // for g in the generating set; by induction on word length this forces the full law.
  IntMatrix rel(h, 1 + gens.size() * h);
  rel(0, 0) = 1;
  std::size_t col = 1;
  for (std::size_t g : gens)
    for (std::size_t x = 0; x < h; ++x, ++col) {
      rel(g, col) += 1;
      rel(x, col) += 1;
      rel(out.table[g][x], col) -= 1;
    }
  out.group = quotient_by_relations(rel).group;
  return out;
}

FinGenAbGroup class_group_imaginary_quadratic(Int d) { return form_class_group(d).group; }

}  // namespace ftq
