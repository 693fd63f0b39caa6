#include "rectchar/schur.hpp"

namespace rectchar {

namespace {

Integer content_product(const Partition& shape, const Integer& shift) {
  Integer product = 1;
  for (int i = 1; i <= shape.length(); ++i) {
    for (int j = 1; j <= shape.row(i); ++j) product *= shift + content({i, j});
  }
  return product;
}

}  // namespace

Rational schur_principal(const Partition& shape, const Integer& p) {
  return make_rational(content_product(shape, p), hook_product(shape));
}

Rational schur_negative(const Partition& shape, const Integer& q) {
  return make_rational(content_product(shape, -q), hook_product(shape));
}

bool lemma_check(const Partition& shape, int p, int q) {
  const Partition rest = complement(shape, p, q);
  Rational rhs = Rational(hook_product(shape) * hook_product(rest)) * schur_principal(shape, p) *
                 schur_negative(shape, q);
  if (shape.size() % 2 != 0) rhs = -rhs;
  return rhs == Rational(hook_product(Partition::rectangle(p, q)));
}

bool sq_hook_multiset_check(const Partition& shape, int p, int q) {
  const auto sq = cellset_hooks(sq_shape(shape, p, q));
  const auto rect = cellset_hooks(diagram(Partition::rectangle(p, q)));
  const auto own = cellset_hooks(diagram(shape));
  return sq == multiset_union(rect, own);
}

bool sq_hook_product_check(const Partition& shape, int p, int q) {
  Integer lhs = 1;
  for (int h : cellset_hooks(sq_shape(shape, p, q))) lhs *= h;
  const Integer rhs = hook_product(complement(shape, p, q)) * content_product(shape, p) *
                      content_product(conjugate(shape), q);
  return lhs == rhs;
}

}  // namespace rectchar
