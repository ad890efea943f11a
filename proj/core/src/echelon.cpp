#include "sigbasis/echelon.hpp"

#include <algorithm>

#include "sigbasis/error.hpp"

namespace sigbasis {
namespace {

void make_primitive(std::vector<mpz_class>& r) {
  mpz_class g = 0;
  for (const mpz_class& v : r) {
    if (v != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1)
        return;
    }
  }
  if (g > 1)
    for (mpz_class& v : r)
      if (v != 0)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

template <class T>
std::size_t first_nonzero(const std::vector<T>& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0)
      return i;
  return r.size();
}

} // namespace

Echelon::Echelon(const Field& field, std::size_t columns)
    : field_(field), columns_(columns), pivot_row_(columns, -1) {}

std::vector<mpz_class> Echelon::to_integers(const Row& row) const {
  if (row.size() != columns_)
    throw StructuralError("row width does not match the echelon");
  mpz_class den = 1;
  for (const Coefficient& c : row)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> out(columns_);
  for (std::size_t i = 0; i < columns_; ++i)
    out[i] = row[i].rational().get_num() * (den / row[i].rational().get_den());
  make_primitive(out);
  return out;
}

std::vector<std::uint64_t> Echelon::to_residues(const Row& row) const {
  if (row.size() != columns_)
    throw StructuralError("row width does not match the echelon");
  std::vector<std::uint64_t> out(columns_);
  for (std::size_t i = 0; i < columns_; ++i)
    out[i] = row[i].residue().value;
  return out;
}

std::size_t Echelon::reduce_top(std::vector<mpz_class>& r) const {
  for (;;) {
    std::size_t c = first_nonzero(r);
    if (c == columns_ || pivot_row_[c] < 0)
      return c;
    const auto& p = qrows_[pivot_row_[c]];
    mpz_class a = p[c], b = r[c];
    for (std::size_t j = c; j < columns_; ++j)
      r[j] = a * r[j] - b * p[j];
    make_primitive(r);
  }
}

std::size_t Echelon::reduce_top(std::vector<std::uint64_t>& r) const {
  std::uint64_t p = field_.characteristic();
  for (;;) {
    std::size_t c = first_nonzero(r);
    if (c == columns_ || pivot_row_[c] < 0)
      return c;
    const auto& row = prows_[pivot_row_[c]];
    // pivot rows are stored monic
    std::uint64_t f = r[c];
    for (std::size_t j = c; j < columns_; ++j)
      r[j] = (r[j] + (p - f) * row[j]) % p;
  }
}

void Echelon::reduce_full(std::vector<mpz_class>& r) const {
  for (std::size_t c = 0; c < columns_; ++c) {
    if (r[c] == 0 || pivot_row_[c] < 0)
      continue;
    const auto& p = qrows_[pivot_row_[c]];
    mpz_class a = p[c], b = r[c];
    for (std::size_t j = 0; j < columns_; ++j)
      r[j] = a * r[j] - b * p[j];
    make_primitive(r);
  }
}

void Echelon::reduce_full(std::vector<std::uint64_t>& r) const {
  std::uint64_t p = field_.characteristic();
  for (std::size_t c = 0; c < columns_; ++c) {
    if (r[c] == 0 || pivot_row_[c] < 0)
      continue;
    const auto& row = prows_[pivot_row_[c]];
    std::uint64_t f = r[c];
    for (std::size_t j = 0; j < columns_; ++j)
      r[j] = (r[j] + (p - f) * row[j]) % p;
  }
}

std::optional<std::size_t> Echelon::add(const Row& row) {
  std::size_t c;
  if (field_.kind() == Field::Kind::rationals) {
    auto r = to_integers(row);
    c = reduce_top(r);
    if (c == columns_)
      return std::nullopt;
    if (r[c] < 0)
      for (auto& v : r)
        v = -v;
    pivot_row_[c] = static_cast<long>(qrows_.size());
    qrows_.push_back(std::move(r));
  } else {
    auto r = to_residues(row);
    c = reduce_top(r);
    if (c == columns_)
      return std::nullopt;
    std::uint64_t p = field_.characteristic();
    std::uint64_t inv = Coefficient(Residue{static_cast<std::uint32_t>(r[c]), static_cast<std::uint32_t>(p)})
                            .inverse()
                            .residue()
                            .value;
    for (auto& v : r)
      v = v * inv % p;
    pivot_row_[c] = static_cast<long>(prows_.size());
    prows_.push_back(std::move(r));
  }
  pivot_columns_.push_back(c);
  return c;
}

bool Echelon::in_span(const Row& row) const {
  if (field_.kind() == Field::Kind::rationals) {
    auto r = to_integers(row);
    return reduce_top(r) == columns_;
  }
  auto r = to_residues(row);
  return reduce_top(r) == columns_;
}

bool Echelon::congruent_up_to_scalar(const Row& a, const Row& b) const {
  if (field_.kind() == Field::Kind::rationals) {
    auto ra = to_integers(a), rb = to_integers(b);
    reduce_full(ra);
    reduce_full(rb);
    std::size_t ca = first_nonzero(ra), cb = first_nonzero(rb);
    if (ca != cb)
      return false;
    if (ca == columns_)
      return true;
    // primitive vectors are proportional iff equal up to sign
    if ((ra[ca] < 0) != (rb[cb] < 0))
      for (auto& v : rb)
        v = -v;
    return ra == rb;
  }
  auto ra = to_residues(a), rb = to_residues(b);
  reduce_full(ra);
  reduce_full(rb);
  std::size_t ca = first_nonzero(ra), cb = first_nonzero(rb);
  if (ca != cb)
    return false;
  if (ca == columns_)
    return true;
  std::uint64_t p = field_.characteristic();
  for (std::size_t j = 0; j < columns_; ++j)
    if (ra[j] * rb[ca] % p != rb[j] * ra[ca] % p)
      return false;
  return true;
}

ColumnIndex::ColumnIndex(const Space& space, std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return space.less(b, a); });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  monomials_ = std::move(monomials);
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    lookup_.emplace(monomials_[i], i);
}

std::optional<std::size_t> ColumnIndex::find(const Monomial& m) const {
  auto it = lookup_.find(m);
  if (it == lookup_.end())
    return std::nullopt;
  return it->second;
}

Echelon::Row ColumnIndex::row(const Element& f) const {
  Echelon::Row r(monomials_.size(), f.space()->field().zero());
  for (const Term& t : f.terms()) {
    auto c = find(t.monomial);
    if (!c)
      throw ContractError("monomial outside the column set");
    r[*c] = t.coefficient;
  }
  return r;
}

std::vector<Monomial> multipliers_up_to(const Ring& ring, std::uint64_t max_degree) {
  std::vector<Monomial> out;
  for_each_monomial_up_to(ring.width(), max_degree, [&](const Monomial& a) {
    if (ring.monoid.contains(a))
      out.push_back(a);
  });
  return out;
}

namespace {

std::vector<Element> bounded_products(const std::vector<Element>& gens, std::uint64_t max_degree) {
  std::vector<Element> rows;
  if (gens.empty())
    return rows;
  const Ring& ring = gens.front().space()->ring();
  std::vector<Monomial> mults = multipliers_up_to(ring, max_degree);
  for (const Element& g : gens) {
    if (g.is_zero())
      continue;
    for (const Monomial& a : mults)
      if (a.degree() + g.degree() <= max_degree)
        rows.push_back(g.times(a));
  }
  return rows;
}

std::vector<Monomial> support(const std::vector<Element>& rows) {
  std::vector<Monomial> cols;
  for (const Element& r : rows)
    for (const Term& t : r.terms())
      cols.push_back(t.monomial);
  return cols;
}

} // namespace

std::vector<Monomial> bounded_span_pivots(const std::vector<Element>& gens, std::uint64_t max_degree) {
  for (const Element& g : gens)
    if (!g.is_zero() && g.degree() > max_degree)
      throw ContractError("degree bound below a generator degree");
  std::vector<Element> rows = bounded_products(gens, max_degree);
  if (rows.empty())
    return {};
  const Space& space = *rows.front().space();
  ColumnIndex cols(space, support(rows));
  Echelon ech(space.field(), cols.size());
  for (const Element& r : rows)
    ech.add(cols.row(r));
  std::vector<std::size_t> piv = ech.pivot_columns();
  std::sort(piv.begin(), piv.end());
  std::vector<Monomial> out;
  for (std::size_t c : piv)
    out.push_back(cols.monomial(c));
  return out;
}

bool membership_bounded(const Element& f, const std::vector<Element>& gens, std::uint64_t max_degree) {
  if (f.is_zero())
    return true;
  std::vector<Element> rows = bounded_products(gens, max_degree);
  std::vector<Monomial> mons = support(rows);
  for (const Term& t : f.terms())
    mons.push_back(t.monomial);
  ColumnIndex cols(*f.space(), std::move(mons));
  Echelon ech(f.space()->field(), cols.size());
  for (const Element& r : rows)
    ech.add(cols.row(r));
  return ech.in_span(cols.row(f));
}

} // namespace sigbasis
