#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "ccperm/error.hpp"

// Overflow-checked integer arithmetic. Every operation either returns the
// exact result or throws OverflowError; nothing ever wraps.
namespace ccperm::checked {

using Natural = std::uint64_t;
using Integer = std::int64_t;

template <std::integral T>
T add(T a, T b, std::string_view what = "addition") {
  T r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::string(what));
  }
  return r;
}

template <std::integral T>
T sub(T a, T b, std::string_view what = "subtraction") {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::string(what));
  }
  return r;
}

template <std::integral T>
T mul(T a, T b, std::string_view what = "multiplication") {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::string(what));
  }
  return r;
}

template <std::integral T>
T pow(T base, unsigned exponent, std::string_view what = "power") {
  T r = 1;
  for (unsigned e = 0; e < exponent; ++e) r = mul(r, base, what);
  return r;
}

// Lossless conversion between integer types.
template <std::integral To, std::integral From>
To narrow(From v, std::string_view what = "conversion") {
  if (!std::in_range<To>(v)) {
    throw OverflowError("integer overflow in " + std::string(what));
  }
  return static_cast<To>(v);
}

}  // namespace ccperm::checked
