#pragma once

#include <concepts>

#include "trinomial/exact_int.hpp"

namespace trinomial {

/// Scalar types the triangle engine can run over: a commutative ring with
/// integer constants embedded through construction from ExactInt.
template <class R>
concept CommutativeRing = std::regular<R> && std::constructible_from<R, const ExactInt&> &&
                          requires(const R& a, const R& b) {
                            { a + b } -> std::convertible_to<R>;
                            { a - b } -> std::convertible_to<R>;
                            { a * b } -> std::convertible_to<R>;
                            { -a } -> std::convertible_to<R>;
                          };

template <CommutativeRing R>
R ring_zero() {
  return R(ExactInt(0));
}

template <CommutativeRing R>
R ring_one() {
  return R(ExactInt(1));
}

}  // namespace trinomial
