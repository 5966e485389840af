#include "ftq/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <limits>
#include <sstream>
#include <utility>


namespace ftq {

namespace {

using Big = BigInt;

// Quotient rounded to nearest, so remainders are balanced.
Big nearest_quotient(const Big& a, const Big& b) {
  Big q = a / b;
  const Big r = a - q * b;
  if (2 * abs(r) > abs(b)) q += (r < 0) == (b < 0) ? 1 : -1;
  return q;
}

// Bookkeeping for elementary operations on a working matrix, keeping
// left * original * right == work and the two inverses in sync.
struct SmithWork {
  BigMatrix a;
  BigMatrix left, left_inv, right, right_inv;

  explicit SmithWork(const IntMatrix& m)
      : a(m),
        left(BigMatrix::identity(m.rows())),
        left_inv(BigMatrix::identity(m.rows())),
        right(BigMatrix::identity(m.cols())),
        right_inv(BigMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    left.swap_rows(i, j);
    left_inv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    right.swap_cols(i, j);
    right_inv.swap_rows(i, j);
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Big& k) {
    a.add_row_multiple(dst, src, k);
    left.add_row_multiple(dst, src, k);
    left_inv.add_col_multiple(src, dst, -k);
  }
  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Big& k) {
    a.add_col_multiple(dst, src, k);
    right.add_col_multiple(dst, src, k);
    right_inv.add_row_multiple(src, dst, -k);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    left.negate_row(i);
    left_inv.negate_col(i);
  }
  void negate_col(std::size_t j) {
    a.negate_col(j);
    right.negate_col(j);
    right_inv.negate_row(j);
  }
  // rows (p, q) <- [[u, v], [s, t]] (rows p, q), with u t - v s = 1
  void combine_rows(std::size_t p, std::size_t q, const Big& u, const Big& v, const Big& s, const Big& t) {
    mix_rows(a, p, q, u, v, s, t);
    mix_rows(left, p, q, u, v, s, t);
    mix_cols(left_inv, p, q, t, -s, -v, u);
  }
  // cols (p, q) <- (cols p, q) [[u, s], [v, t]], with u t - v s = 1
  void combine_cols(std::size_t p, std::size_t q, const Big& u, const Big& v, const Big& s, const Big& t) {
    mix_cols(a, p, q, u, v, s, t);
    mix_cols(right, p, q, u, v, s, t);
    mix_rows(right_inv, p, q, t, -s, -v, u);
  }

 private:
  static void mix_rows(BigMatrix& m, std::size_t p, std::size_t q, const Big& u, const Big& v, const Big& s, const Big& t) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Big x = m(p, c), y = m(q, c);
      m(p, c) = u * x + v * y;
      m(q, c) = s * x + t * y;
    }
  }
  // col p <- u col p + v col q; col q <- s col p + t col q
  static void mix_cols(BigMatrix& m, std::size_t p, std::size_t q, const Big& u, const Big& v, const Big& s, const Big& t) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Big x = m(r, p), y = m(r, q);
      m(r, p) = u * x + v * y;
      m(r, q) = s * x + t * y;
    }
  }
};

// g = gcd(a, b) >= 0 with u a + v b = g.
Big big_xgcd(const Big& a, const Big& b, Big& u, Big& v) {
  Big r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Big q = r0 / r1;
    Big tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  u = s0;
  v = t0;
  return r0;
}

// Row Hermite form: pivots positive, entries above a pivot reduced into [0, pivot).
void hermite_rows(SmithWork& w) {
  const std::size_t rows = w.a.rows(), cols = w.a.cols();
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (w.a(i, j) == 0) continue;
      const Big x = w.a(r, j), y = w.a(i, j);
      Big u, v;
      const Big g = big_xgcd(x, y, u, v);
      w.combine_rows(r, i, u, v, -y / g, x / g);
    }
    if (w.a(r, j) == 0) continue;
    if (w.a(r, j) < 0) w.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Big q = w.a(i, j) / w.a(r, j);
      if (w.a(i, j) - q * w.a(r, j) < 0) --q;
      if (q != 0) w.add_row(i, r, -q);
    }
    ++r;
  }
}

// Column Hermite form, the transpose of the above.
void hermite_cols(SmithWork& w) {
  const std::size_t rows = w.a.rows(), cols = w.a.cols();
  std::size_t c = 0;
  for (std::size_t i = 0; i < rows && c < cols; ++i) {
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (w.a(i, j) == 0) continue;
      const Big x = w.a(i, c), y = w.a(i, j);
      Big u, v;
      const Big g = big_xgcd(x, y, u, v);
      w.combine_cols(c, j, u, v, -y / g, x / g);
    }
    if (w.a(i, c) == 0) continue;
    if (w.a(i, c) < 0) w.negate_col(c);
    for (std::size_t j = 0; j < c; ++j) {
      Big q = w.a(i, j) / w.a(i, c);
      if (w.a(i, j) - q * w.a(i, c) < 0) --q;
      if (q != 0) w.add_col(j, c, -q);
    }
    ++c;
  }
}

// Greedy pairwise size reduction of the target vectors against the basis
// vectors; `apply(dst, src, k)` performs dst += k src.  Every applied step
// strictly shortens the target, so the loop terminates.
template <typename Get, typename Apply>
void pairwise_reduce(std::size_t len, Get get, const std::vector<std::size_t>& targets,
                     const std::vector<std::size_t>& basis, Apply apply) {
  auto dot = [&](std::size_t p, std::size_t q) {
    Big d = 0;
    for (std::size_t e = 0; e < len; ++e) d += get(p, e) * get(q, e);
    return d;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p : targets)
      for (std::size_t q : basis) {
        if (p == q) continue;
        const Big nq = dot(q, q);
        if (nq == 0) continue;
        const Big k = nearest_quotient(dot(p, q), nq);
        if (k == 0) continue;
        apply(p, q, Big(-k));
        changed = true;
      }
  }
}

bool at_most_one_per_line(const BigMatrix& a) {
  std::vector<int> per_col(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    int per_row = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && (++per_row > 1 || ++per_col[j] > 1)) return false;
  }
  return true;
}

}  // namespace

std::size_t SmithForm::rank() const {
  return static_cast<std::size_t>(std::count_if(diag.begin(), diag.end(), [](Int d) { return d != 0; }));
}

namespace {

IntMatrix transposed(const IntMatrix& m) {
  IntMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

SmithForm smith_wide(const IntMatrix& m);

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  if (m.rows() <= m.cols()) return smith_wide(m);
  // Tall input: reduce the transpose, whose first Hermite pass has no kernel rows.
  SmithForm t = smith_wide(transposed(m));
  SmithForm out;
  out.diag = std::move(t.diag);
  out.left = t.right.transposed();
  out.left_inv = t.right_inv.transposed();
  out.right = t.left.transposed();
  out.right_inv = t.left_inv.transposed();
  return out;
}

namespace {

SmithForm smith_wide(const IntMatrix& m) {
  SmithWork w(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t steps = std::min(rows, cols);

  // Alternating Hermite reductions keep the transforms near the size forced
  // by the adjugate, unlike pivot-by-pivot elimination.
  for (bool by_rows = true; !at_most_one_per_line(w.a); by_rows = !by_rows) {
    if (by_rows)
      hermite_rows(w);
    else
      hermite_cols(w);
  }

  // Move the surviving entries onto the diagonal.
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows && k < steps; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (w.a(i, j) != 0) {
        w.swap_rows(k, i);
        w.swap_cols(k, j);
        ++k;
        break;
      }
  for (std::size_t i = 0; i < k; ++i)
    if (w.a(i, i) < 0) w.negate_row(i);

  // diag(a, b) -> diag(gcd, lcm) until the divisibility chain holds.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Big x = w.a(i, i), y = w.a(j, j);
      if (y % x == 0) continue;
      Big u, v;
      const Big g = big_xgcd(x, y, u, v);
      w.add_row(i, j, 1);
      w.combine_cols(i, j, u, v, -y / g, x / g);
      w.add_row(j, i, -(w.a(j, i) / g));
      if (w.a(j, j) < 0) w.negate_row(j);
    }

  // Rows of left past the rank annihilate m, and so do columns of right;
  // when entries have grown large they are shortened against each other.
  auto oversized = [](const BigMatrix& x) {
    static const Big limit = Big(1) << 40;
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j)
        if (abs(x(i, j)) > limit) return true;
    return false;
  };
  if (oversized(w.left)) {
    std::vector<std::size_t> all_rows(rows), kernel_rows;
    std::iota(all_rows.begin(), all_rows.end(), 0);
    for (std::size_t i = k; i < rows; ++i) kernel_rows.push_back(i);
    pairwise_reduce(
        rows, [&](std::size_t p, std::size_t e) -> const Big& { return w.left(p, e); }, all_rows, kernel_rows,
        [&](std::size_t dst, std::size_t src, const Big& c) { w.add_row(dst, src, c); });
  }
  if (oversized(w.right)) {
    std::vector<std::size_t> all_cols(cols), kernel_cols;
    std::iota(all_cols.begin(), all_cols.end(), 0);
    for (std::size_t j = k; j < cols; ++j) kernel_cols.push_back(j);
    pairwise_reduce(
        cols, [&](std::size_t p, std::size_t e) -> const Big& { return w.right(e, p); }, all_cols, kernel_cols,
        [&](std::size_t dst, std::size_t src, const Big& c) { w.add_col(dst, src, c); });
  }

  SmithForm out;
  out.diag.resize(steps);
  for (std::size_t i = 0; i < steps; ++i) out.diag[i] = narrow(w.a(i, i));
  out.left = std::move(w.left);
  out.left_inv = std::move(w.left_inv);
  out.right = std::move(w.right);
  out.right_inv = std::move(w.right_inv);
  return out;
}

}  // namespace

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  const std::size_t r = s.rank();
  IntMatrix k(m.cols(), m.cols() - r);
  for (std::size_t j = r; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j - r) = narrow(s.right(i, j));
  return k;
}

// ---------------------------------------------------------------------------

FinGenAbGroup::FinGenAbGroup(std::size_t free_rank, std::vector<Int> invariant_factors)
    : free_rank_(free_rank), invariant_factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < invariant_factors_.size(); ++i) {
    if (invariant_factors_[i] < 2)
      throw std::invalid_argument("invariant factors must be >= 2");
    if (i > 0 && invariant_factors_[i] % invariant_factors_[i - 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

FinGenAbGroup FinGenAbGroup::cyclic(Int n) {
  if (n < 0) n = -n;
  if (n == 0) return FinGenAbGroup(1, {});
  if (n == 1) return {};
  return FinGenAbGroup(0, {n});
}

FinGenAbGroup FinGenAbGroup::free(std::size_t rank) { return FinGenAbGroup(rank, {}); }

Int FinGenAbGroup::generator_order(std::size_t i) const {
  return i < invariant_factors_.size() ? invariant_factors_[i] : 0;
}

Int FinGenAbGroup::order() const {
  if (!is_finite()) throw std::domain_error("order of an infinite group");
  Int n = 1;
  for (Int d : invariant_factors_) n = checked_mul(n, d);
  return n;
}

Element FinGenAbGroup::reduce(Element x) const {
  if (x.size() != num_generators()) throw std::invalid_argument("element has wrong number of coordinates");
  for (std::size_t i = 0; i < invariant_factors_.size(); ++i) x[i] = mod_floor(x[i], invariant_factors_[i]);
  return x;
}

bool FinGenAbGroup::is_reduced(const Element& x) const {
  if (x.size() != num_generators()) return false;
  for (std::size_t i = 0; i < invariant_factors_.size(); ++i)
    if (x[i] < 0 || x[i] >= invariant_factors_[i]) return false;
  return true;
}

Element FinGenAbGroup::add(const Element& x, const Element& y) const {
  Element z(num_generators());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = checked_add(x.at(i), y.at(i));
  return reduce(std::move(z));
}

Element FinGenAbGroup::negate(const Element& x) const { return scale(x, -1); }

Element FinGenAbGroup::scale(const Element& x, Int k) const {
  Element z(num_generators());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = checked_mul(x.at(i), k);
  return reduce(std::move(z));
}

bool FinGenAbGroup::is_zero(const Element& x) const {
  const Element r = reduce(x);
  return std::all_of(r.begin(), r.end(), [](Int v) { return v == 0; });
}

IntMatrix FinGenAbGroup::relation_matrix() const {
  IntMatrix r(num_generators(), torsion_rank());
  for (std::size_t i = 0; i < torsion_rank(); ++i) r(i, i) = invariant_factors_[i];
  return r;
}

std::vector<Element> FinGenAbGroup::elements(std::size_t bound) const {
  if (!is_finite()) throw EnumerationLimitError("cannot enumerate an infinite group " + to_string());
  Int n = 1;
  for (Int d : invariant_factors_) {
    n = checked_mul(n, d);
    if (n > static_cast<Int>(bound))
      throw EnumerationLimitError("group " + to_string() + " exceeds enumeration bound " + std::to_string(bound));
  }
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(n));
  Element cur = zero();
  for (Int k = 0; k < n; ++k) {
    out.push_back(cur);
    // Last coordinate varies fastest.
    for (std::size_t i = cur.size(); i-- > 0;) {
      if (++cur[i] < invariant_factors_[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

std::size_t FinGenAbGroup::index_of(const Element& x) const {
  if (!is_finite() || !is_reduced(x)) throw std::invalid_argument("index_of needs a reduced element of a finite group");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    idx = idx * static_cast<std::size_t>(invariant_factors_[i]) + static_cast<std::size_t>(x[i]);
  return idx;
}

std::string FinGenAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (Int d : invariant_factors_) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  if (free_rank_ > 0) {
    if (!first) os << " + ";
    os << "Z";
    if (free_rank_ > 1) os << '^' << free_rank_;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Quotient quotient_by_relations(const IntMatrix& relations) {
  const std::size_t k = relations.rows();
  const SmithForm s = smith_normal_form(relations);
  std::vector<std::size_t> torsion_idx, free_idx;
  std::vector<Int> factors;
  for (std::size_t i = 0; i < k; ++i) {
    const Int d = i < s.diag.size() ? s.diag[i] : 0;
    if (d == 0) {
      free_idx.push_back(i);
    } else if (d >= 2) {
      torsion_idx.push_back(i);
      factors.push_back(d);
    }
  }
  Quotient q;
  q.group = FinGenAbGroup(free_idx.size(), std::move(factors));
  std::vector<std::size_t> order = torsion_idx;
  order.insert(order.end(), free_idx.begin(), free_idx.end());
  q.to_canonical = IntMatrix(order.size(), k);
  q.from_canonical = IntMatrix(k, order.size());
  for (std::size_t c = 0; c < order.size(); ++c)
    for (std::size_t j = 0; j < k; ++j) {
      BigInt t = s.left(order[c], j);
      if (c < q.group.torsion_rank()) {
        const BigInt d = q.group.invariant_factors()[c];
        t %= d;
        if (t < 0) t += d;
      }
      q.to_canonical(c, j) = narrow(t);
      q.from_canonical(j, c) = narrow(s.left_inv(j, order[c]));
    }
  return q;
}

Quotient direct_sum(const FinGenAbGroup& g, const FinGenAbGroup& h) {
  const std::size_t a = g.num_generators(), b = h.num_generators();
  IntMatrix rel(a + b, g.torsion_rank() + h.torsion_rank());
  for (std::size_t i = 0; i < g.torsion_rank(); ++i) rel(i, i) = g.invariant_factors()[i];
  for (std::size_t i = 0; i < h.torsion_rank(); ++i) rel(a + i, g.torsion_rank() + i) = h.invariant_factors()[i];
  return quotient_by_relations(rel);
}

// ---------------------------------------------------------------------------

GroupHom::GroupHom(FinGenAbGroup domain, FinGenAbGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.num_generators() || matrix_.cols() != domain_.num_generators())
    throw std::invalid_argument("homomorphism matrix has shape " + std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()) + ", expected " +
                                std::to_string(codomain_.num_generators()) + "x" +
                                std::to_string(domain_.num_generators()));
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    Element col = codomain_.reduce(matrix_.column(j));
    for (std::size_t i = 0; i < col.size(); ++i) matrix_(i, j) = col[i];
    const Int d = domain_.generator_order(j);
    if (d != 0 && !codomain_.is_zero(codomain_.scale(col, d)))
      throw std::invalid_argument("matrix does not define a homomorphism: generator " + std::to_string(j) +
                                  " of order " + std::to_string(d) + " has image of larger order");
  }
}

GroupHom GroupHom::identity(const FinGenAbGroup& g) { return {g, g, IntMatrix::identity(g.num_generators())}; }

GroupHom GroupHom::zero(const FinGenAbGroup& domain, const FinGenAbGroup& codomain) {
  return {domain, codomain, IntMatrix(codomain.num_generators(), domain.num_generators())};
}

Element GroupHom::operator()(const Element& x) const {
  if (x.size() != domain_.num_generators()) throw std::invalid_argument("element not in domain");
  return codomain_.reduce(matrix_ * x);
}

GroupHom GroupHom::compose(const GroupHom& inner) const {
  if (!(inner.codomain_ == domain_)) throw std::invalid_argument("composition of incompatible homomorphisms");
  return {inner.domain_, codomain_, matrix_ * inner.matrix_};
}

KernelResult kernel(const GroupHom& f) {
  const FinGenAbGroup& dom = f.domain();
  const FinGenAbGroup& cod = f.codomain();
  const std::size_t n = dom.num_generators();

  // x lies in the kernel iff (x, y) solves [M | R_C] (x, y) = 0 for some y.
  const IntMatrix lifted = integer_kernel(f.matrix().hconcat(cod.relation_matrix()));
  IntMatrix gens(n, lifted.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < lifted.cols(); ++j) gens(i, j) = lifted(i, j);

  // Relations among the generators: combinations landing in the domain relations.
  IntMatrix neg_rel = dom.relation_matrix();
  for (std::size_t i = 0; i < neg_rel.rows(); ++i)
    for (std::size_t j = 0; j < neg_rel.cols(); ++j) neg_rel(i, j) = -neg_rel(i, j);
  const IntMatrix rel_lift = integer_kernel(gens.hconcat(neg_rel));
  IntMatrix rel(gens.cols(), rel_lift.cols());
  for (std::size_t i = 0; i < gens.cols(); ++i)
    for (std::size_t j = 0; j < rel_lift.cols(); ++j) rel(i, j) = rel_lift(i, j);

  Quotient q = quotient_by_relations(rel);
  IntMatrix incl = gens * q.from_canonical;
  return {q.group, GroupHom(q.group, dom, std::move(incl))};
}

CokernelResult cokernel(const GroupHom& f) {
  const FinGenAbGroup& cod = f.codomain();
  Quotient q = quotient_by_relations(cod.relation_matrix().hconcat(f.matrix()));
  return {q.group, GroupHom(cod, q.group, std::move(q.to_canonical))};
}

bool contains_in_image(const GroupHom& f, const Element& y) {
  const FinGenAbGroup& cod = f.codomain();
  if (!cod.is_reduced(y)) throw std::invalid_argument("element " + element_to_string(y) + " is not a reduced codomain element");
  const SmithForm s = smith_normal_form(f.matrix().hconcat(cod.relation_matrix()));
  const std::vector<BigInt> z = s.left * y;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const BigInt d = i < s.diag.size() ? s.diag[i] : 0;
    if (d == 0) {
      if (z[i] != 0) return false;
    } else if (z[i] % d != 0) {
      return false;
    }
  }
  return true;
}

std::size_t mod_ell_dimension(const FinGenAbGroup& g, Int ell) {
  std::size_t dim = g.free_rank();
  for (Int d : g.invariant_factors())
    if (d % ell == 0) ++dim;
  return dim;
}

// ---------------------------------------------------------------------------

Involution::Involution(GroupHom underlying) : hom_(std::move(underlying)) {
  if (!(hom_.domain() == hom_.codomain())) throw std::invalid_argument("involution must be an endomorphism");
  if (!(hom_.compose(hom_) == GroupHom::identity(hom_.domain())))
    throw std::invalid_argument("involution does not square to the identity");
}

Involution Involution::negation(const FinGenAbGroup& g) {
  IntMatrix m = IntMatrix::identity(g.num_generators());
  for (std::size_t i = 0; i < g.num_generators(); ++i) m(i, i) = -1;
  return Involution(GroupHom(g, g, std::move(m)));
}

Involution Involution::identity(const FinGenAbGroup& g) { return Involution(GroupHom::identity(g)); }

std::vector<Orbit> involution_orbits(const FinGenAbGroup& g, const Involution& s, std::size_t bound) {
  if (!(s.group() == g)) throw std::invalid_argument("involution acts on a different group");
  const std::vector<Element> elems = g.elements(bound);
  std::vector<bool> seen(elems.size(), false);
  std::vector<Orbit> orbits;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (seen[i]) continue;
    seen[i] = true;
    Element image = s(elems[i]);
    const std::size_t j = g.index_of(image);
    Orbit o;
    o.members.push_back(elems[i]);
    if (j == i) {
      o.fixed = true;
    } else {
      seen[j] = true;
      o.members.push_back(std::move(image));
    }
    orbits.push_back(std::move(o));
  }
  return orbits;
}

std::string element_to_string(const Element& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ',';
    os << x[i];
  }
  os << ')';
  return os.str();
}

}  // namespace ftq
