#ifndef SIGBASIS_ELEMENT_HPP
#define SIGBASIS_ELEMENT_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sigbasis/coefficient.hpp"
#include "sigbasis/monomial.hpp"

namespace sigbasis {

/// Variables, coefficient field and multiplier monoid shared by every space of a problem.
struct Ring {
  std::vector<std::string> variables;
  Field field = Field::rationals();
  MonoidSpec monoid;

  std::size_t width() const { return variables.size(); }
};

using RingPtr = std::shared_ptr<const Ring>;

/// A free module over the ring (rank 0 is the ring itself) with its monomial order.
class Space {
public:
  Space(RingPtr ring, ModuleOrder order);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const ModuleOrder& order() const { return order_; }
  const Field& field() const { return ring_->field; }
  const MonoidSpec& monoid() const { return ring_->monoid; }
  std::size_t width() const { return ring_->width(); }
  std::uint32_t rank() const { return order_.rank(); }

  bool less(const Monomial& a, const Monomial& b) const { return order_.less(a, b); }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

private:
  RingPtr ring_;
  ModuleOrder order_;
};

using SpacePtr = std::shared_ptr<const Space>;

SpacePtr make_space(RingPtr ring, ModuleOrder order);

/// Same ring and order, regardless of object identity.
bool same_space(const Space& a, const Space& b);

struct Term {
  Monomial monomial;
  Coefficient coefficient;

  bool operator==(const Term& o) const { return monomial == o.monomial && coefficient == o.coefficient; }
};

/// Finite combination of monomials of one space, stored strictly descending
/// with no zero coefficients.
class Element {
public:
  explicit Element(SpacePtr space) : space_(std::move(space)) {}

  /// Sorts, merges equal monomials and drops zeros.
  static Element from_terms(SpacePtr space, std::vector<Term> terms);
  static Element monomial(SpacePtr space, Monomial m, Coefficient c);

  const SpacePtr& space() const { return space_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Leading monomial, or the zero monomial for the zero element.
  const Monomial& lm() const;
  const Coefficient& lc() const;
  /// Largest total degree of a term; 0 for the zero element.
  std::uint64_t degree() const;

  Element times(const Monomial& a) const;
  Element scaled(const Coefficient& c) const;
  Element monic() const;
  /// Drops the leading term.
  Element without_lead() const;
  Element operator-() const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  /// this - c * a * e, computed as one merge.
  Element minus_multiple(const Coefficient& c, const Monomial& a, const Element& e) const;

  bool operator==(const Element& o) const;

private:
  void check_compatible(const Element& o) const;

  SpacePtr space_;
  std::vector<Term> terms_;
};

inline const Monomial& lm(const Element& f) { return f.lm(); }

/// Replaces f by f - (lc f / lc e) e. Requires lm e == lm f != 0.
Element top_reduce_step(const Element& f, const Element& e);

/// A reducer for a target monomial: multiplier * element has that leading monomial.
struct Reducer {
  Monomial multiplier;
  const Element* element = nullptr;
};

using Admission = std::function<std::optional<Reducer>(const Monomial& target)>;

struct NormalForm {
  Element remainder;
  std::size_t steps = 0;
};

/// Repeated top reduction while `admissible` supplies a reducer for the current leading monomial.
NormalForm normal_form(const Element& f, const Admission& admissible);

} // namespace sigbasis

#endif
