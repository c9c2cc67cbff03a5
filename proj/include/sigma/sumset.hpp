#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "sigma/element_set.hpp"
#include "sigma/group.hpp"

namespace sigma {

/// Integer coefficients (one per set element) of a signed combination.
struct SignedCoefficientVector {
  std::vector<std::int64_t> lambdas;

  std::int64_t weight() const noexcept;
  /// sum lambda_i * elements[i]; lengths must match.
  Index apply(const Group& g, std::span<const Index> elements) const;
};

enum class SymmetryClass { Symmetric, NearSymmetric, Asymmetric, Other };

std::string_view to_string(SymmetryClass c) noexcept;

/// dst |= src + g.
void translate_into(const Group& group, const ElementSet& src, Index g, ElementSet& dst);

/// A + B.
ElementSet sumset(const Group& group, const ElementSet& a, const ElementSet& b);

/// hA as the h-fold repeated set sum; 0A = {0}. Throws on empty A.
ElementSet fold_sumset(const Group& group, const ElementSet& a, int h);

/// All sums lambda_1 a_1 + ... + lambda_m a_m with sum |lambda_i| = h, so
/// each element carries a single signed coefficient. Throws on empty A.
ElementSet fold_signed_sumset(const Group& group, const ElementSet& a, int h);

/// -A.
ElementSet negated(const Group& group, const ElementSet& a);

/// Degree of symmetry |A ∩ -A|.
std::size_t sdeg(const Group& group, const ElementSet& a);

/// Symmetric (sdeg = m), Asymmetric (sdeg = 0), NearSymmetric (sdeg = m-1),
/// else Other. A singleton {x} with x != -x is reported as Asymmetric.
SymmetryClass classify_symmetry(const Group& group, const ElementSet& a);

/**
 * One symmetrization move: with b1 < b2 the two smallest elements whose
 * inverses are missing from B, returns (B \ {b1}) ∪ {-b2}. The result has
 * the same size, sdeg two higher, and h-fold signed sumset contained in
 * that of B (checked; a violation throws std::logic_error).
 *
 * Throws InvalidArgument unless |B| >= 3 and 1 <= sdeg(B) <= |B| - 2.
 */
ElementSet symmetrize_step(const Group& group, const ElementSet& b, int h);

/**
 * Reusable scratch for evaluating many signed sumsets of the same fold in one
 * group. Not thread-safe; use one per worker.
 */
class SignedSumsetEvaluator {
 public:
  SignedSumsetEvaluator(const Group& group, int h);

  /// h±A for A given by its element indices (any order, no duplicates).
  const ElementSet& evaluate(std::span<const Index> elements);
  std::size_t size_of(std::span<const Index> elements) { return evaluate(elements).size(); }

 private:
  const Group* group_;
  int h_;
  std::vector<ElementSet> layers_;
};

/// Same idea for plain h-fold sumsets.
class SumsetEvaluator {
 public:
  SumsetEvaluator(const Group& group, int h);

  const ElementSet& evaluate(std::span<const Index> elements);
  std::size_t size_of(std::span<const Index> elements) { return evaluate(elements).size(); }

 private:
  const Group* group_;
  int h_;
  ElementSet base_, current_, next_;
};

}  // namespace sigma
