#ifndef SIGBASIS_VERIFY_HPP
#define SIGBASIS_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sigbasis/element.hpp"
#include "sigbasis/sigpair.hpp"

namespace sigbasis {

/// Full reduction of f: every term, not just the leading one, is reduced by
/// multiples of the given elements.
Element full_reduce(const Element& f, const std::vector<Element>& by);

/// Reduced Groebner basis by plain Buchberger: every S-pair, smallest lcm
/// first, no pair criteria. Sorted by leading monomial, descending.
std::vector<Element> buchberger(const std::vector<Element>& gens, std::size_t max_basis_size = 100000);

/// Each list generates the monomial ideal of the other.
bool lm_ideal_equal(const std::vector<Monomial>& a, const std::vector<Monomial>& b, const MonoidSpec& monoid);

std::vector<Monomial> leading_monomials(const std::vector<Element>& elements);
std::vector<Monomial> leading_monomials(const SigSet& g);

struct BoundedBasisCheck {
  bool passed = true;
  std::size_t signatures_checked = 0;
  /// Signatures at which an echelon pivot is not the leading monomial of any admissible multiple.
  std::vector<Monomial> violations;
};

/// For each signature of a multiple a*g with deg(a*part) <= D, compares the
/// echelon pivots of the admissible multiples (signature <= sigma) with their
/// leading monomials.
BoundedBasisCheck bounded_signature_basis_check(const SigSet& g, std::uint64_t max_degree);

struct BoundedSyzygyCheck {
  bool passed = true;
  std::vector<Monomial> kernel_lms;  ///< leading monomials of the degree-bounded kernel
  std::vector<Monomial> uncovered;   ///< those not divisible by any syzygy signature
};

/// Computes the kernel of the evaluation map on multiples of the prebasis up
/// to degree D and checks each kernel leading monomial against the zero-part
/// signatures of result.
BoundedSyzygyCheck bounded_syzygy_check(const SigSet& prebasis, const SigSet& result, std::uint64_t max_degree);

/// For every pair of multiples realising sigma, tests whether their difference
/// up to a nonzero scalar lies in the degree-bounded span below sigma.
/// Vacuously true when fewer than two multiples realise sigma.
bool prebasis_spotcheck_P2(const SigSet& g, const Monomial& sigma, std::uint64_t max_degree);

} // namespace sigbasis

#endif
