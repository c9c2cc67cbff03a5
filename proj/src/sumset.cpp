#include "sigma/sumset.hpp"

#include <stdexcept>

#include "sigma/error.hpp"

namespace sigma {

namespace {

using Word = ElementSet::Word;
constexpr std::size_t kBits = ElementSet::kWordBits;

void mask_tail(std::span<Word> words, std::size_t universe) {
  if (const std::size_t r = universe % kBits; r != 0) words.back() &= (Word{1} << r) - 1;
}

// dst |= src << s (bits pushed past the universe are dropped).
void or_shift_up(std::span<Word> dst, std::span<const Word> src, std::size_t s) {
  const std::size_t ws = s / kBits, bs = s % kBits, nw = dst.size();
  for (std::size_t i = nw; i-- > ws;) {
    Word v = src[i - ws] << bs;
    if (bs != 0 && i - ws >= 1) v |= src[i - ws - 1] >> (kBits - bs);
    dst[i] |= v;
  }
}

// dst |= src >> s.
void or_shift_down(std::span<Word> dst, std::span<const Word> src, std::size_t s) {
  const std::size_t ws = s / kBits, bs = s % kBits, nw = dst.size();
  for (std::size_t i = 0; i + ws < nw; ++i) {
    Word v = src[i + ws] >> bs;
    if (bs != 0 && i + ws + 1 < nw) v |= src[i + ws + 1] << (kBits - bs);
    dst[i] |= v;
  }
}

void require_nonempty_member_of(const Group& group, const ElementSet& a) {
  if (a.universe() != static_cast<std::size_t>(group.order())) throw InvalidArgument("set does not belong to the group");
  if (a.empty()) throw InvalidArgument("set must be nonempty");
}

void require_fold(int h) {
  if (h < 0 || h > kMaxFold) throw InvalidArgument("fold h must lie in [0, 64]");
}

}  // namespace

std::int64_t SignedCoefficientVector::weight() const noexcept {
  std::int64_t w = 0;
  for (const auto l : lambdas) w += l < 0 ? -l : l;
  return w;
}

Index SignedCoefficientVector::apply(const Group& g, std::span<const Index> elements) const {
  if (elements.size() != lambdas.size()) throw InvalidArgument("coefficient count does not match element count");
  Index sum = 0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) sum = g.add(sum, g.multiple(elements[i], lambdas[i]));
  return sum;
}

std::string_view to_string(SymmetryClass c) noexcept {
  switch (c) {
    case SymmetryClass::Symmetric: return "symmetric";
    case SymmetryClass::NearSymmetric: return "near-symmetric";
    case SymmetryClass::Asymmetric: return "asymmetric";
    case SymmetryClass::Other: return "other";
  }
  return "other";
}

void translate_into(const Group& group, const ElementSet& src, Index g, ElementSet& dst) {
  const std::size_t n = src.universe();
  if (g == 0) {
    dst |= src;
    return;
  }
  if (group.is_cyclic()) {
    // Rotation: x -> x + g for x < n - g, and x -> x + g - n otherwise.
    or_shift_up(dst.words(), src.words(), g);
    mask_tail(dst.words(), n);
    or_shift_down(dst.words(), src.words(), n - g);
    return;
  }
  src.for_each([&](Index x) { dst.insert(group.add(x, g)); });
}

ElementSet sumset(const Group& group, const ElementSet& a, const ElementSet& b) {
  ElementSet out(a.universe());
  const bool iterate_b = group.is_cyclic() || b.size() <= a.size();
  const ElementSet& moving = iterate_b ? a : b;
  const ElementSet& shifts = iterate_b ? b : a;
  shifts.for_each([&](Index g) { translate_into(group, moving, g, out); });
  return out;
}

ElementSet fold_sumset(const Group& group, const ElementSet& a, int h) {
  require_nonempty_member_of(group, a);
  require_fold(h);
  ElementSet result(a.universe());
  result.insert(0);
  const std::size_t n = a.universe();
  for (int i = 0; i < h && result.size() < n; ++i) result = sumset(group, result, a);
  return result;
}

ElementSet fold_signed_sumset(const Group& group, const ElementSet& a, int h) {
  require_nonempty_member_of(group, a);
  require_fold(h);
  SignedSumsetEvaluator eval(group, h);
  const auto members = a.members();
  return eval.evaluate(members);
}

ElementSet negated(const Group& group, const ElementSet& a) {
  ElementSet out(a.universe());
  a.for_each([&](Index x) { out.insert(group.negate(x)); });
  return out;
}

std::size_t sdeg(const Group& group, const ElementSet& a) {
  std::size_t count = 0;
  a.for_each([&](Index x) { count += a.contains(group.negate(x)) ? 1 : 0; });
  return count;
}

SymmetryClass classify_symmetry(const Group& group, const ElementSet& a) {
  const std::size_t m = a.size();
  const std::size_t s = sdeg(group, a);
  if (s == m) return SymmetryClass::Symmetric;
  if (s == 0) return SymmetryClass::Asymmetric;
  if (s + 1 == m) return SymmetryClass::NearSymmetric;
  return SymmetryClass::Other;
}

ElementSet symmetrize_step(const Group& group, const ElementSet& b, int h) {
  require_nonempty_member_of(group, b);
  require_fold(h);
  const std::size_t m = b.size();
  const std::size_t s = sdeg(group, b);
  if (m < 3 || s < 1 || s + 2 > m) {
    throw InvalidArgument("symmetrization needs |B| >= 3 and 1 <= sdeg(B) <= |B| - 2 (got |B| = " +
                          std::to_string(m) + ", sdeg = " + std::to_string(s) + ")");
  }
  std::vector<Index> unpaired;
  b.for_each([&](Index x) {
    if (unpaired.size() < 2 && !b.contains(group.negate(x))) unpaired.push_back(x);
  });
  ElementSet out = b;
  out.erase(unpaired[0]);
  out.insert(group.negate(unpaired[1]));

  if (!fold_signed_sumset(group, out, h).is_subset_of(fold_signed_sumset(group, b, h))) {
    throw std::logic_error("symmetrization enlarged the signed sumset");
  }
  return out;
}

SignedSumsetEvaluator::SignedSumsetEvaluator(const Group& group, int h)
    : group_(&group), h_(h), layers_(static_cast<std::size_t>(h) + 1, ElementSet(static_cast<std::size_t>(group.order()))) {
  require_fold(h);
}

const ElementSet& SignedSumsetEvaluator::evaluate(std::span<const Index> elements) {
  // layers_[w] holds every partial sum of total weight w over the elements
  // seen so far. Weights are updated high to low so each element contributes
  // a single signed coefficient.
  const std::size_t n = static_cast<std::size_t>(group_->order());
  for (auto& layer : layers_) layer.clear();
  layers_[0].insert(0);
  if (h_ == 0) return layers_[0];

  std::vector<Index> plus(static_cast<std::size_t>(h_) + 1), minus(static_cast<std::size_t>(h_) + 1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Index a = elements[i];
    for (int t = 1; t <= h_; ++t) {
      plus[static_cast<std::size_t>(t)] = group_->multiple(a, t);
      minus[static_cast<std::size_t>(t)] = group_->negate(plus[static_cast<std::size_t>(t)]);
    }
    const int lowest = i + 1 == elements.size() ? h_ : 1;
    for (int w = h_; w >= lowest; --w) {
      auto& target = layers_[static_cast<std::size_t>(w)];
      for (int t = 1; t <= w; ++t) {
        const auto& from = layers_[static_cast<std::size_t>(w - t)];
        if (from.empty()) continue;
        translate_into(*group_, from, plus[static_cast<std::size_t>(t)], target);
        if (minus[static_cast<std::size_t>(t)] != plus[static_cast<std::size_t>(t)]) {
          translate_into(*group_, from, minus[static_cast<std::size_t>(t)], target);
        }
      }
    }
    if (layers_[static_cast<std::size_t>(h_)].size() == n) break;
  }
  return layers_[static_cast<std::size_t>(h_)];
}

SumsetEvaluator::SumsetEvaluator(const Group& group, int h)
    : group_(&group),
      h_(h),
      base_(static_cast<std::size_t>(group.order())),
      current_(static_cast<std::size_t>(group.order())),
      next_(static_cast<std::size_t>(group.order())) {
  require_fold(h);
}

const ElementSet& SumsetEvaluator::evaluate(std::span<const Index> elements) {
  const std::size_t n = static_cast<std::size_t>(group_->order());
  base_.clear();
  for (const Index x : elements) base_.insert(x);
  current_.clear();
  current_.insert(0);
  for (int i = 0; i < h_ && current_.size() < n; ++i) {
    next_.clear();
    for (const Index x : elements) translate_into(*group_, current_, x, next_);
    std::swap(current_, next_);
  }
  return current_;
}

}  // namespace sigma
