#pragma once

#include <random>
#include <vector>

#include "skw/freealg.hpp"
#include "skw/scalars.hpp"

namespace skw::test {

inline constexpr std::size_t kCases = 1000;

template <ExactField K>
Scalar<K> random_scalar(const K& field, std::mt19937_64& rng, int spread = 9) {
  std::uniform_int_distribution<long long> num(-spread, spread), den(1, spread);
  if constexpr (std::is_same_v<K, CyclotomicField>) {
    return QZeta(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
  } else if constexpr (std::is_same_v<K, RationalField>) {
    return Rational(num(rng), den(rng));
  } else {
    return field.from_int(num(rng));
  }
}

template <ExactField K>
Scalar<K> random_nonzero(const K& field, std::mt19937_64& rng) {
  for (;;) {
    auto v = random_scalar(field, rng);
    if (!v.is_zero()) return v;
  }
}

template <ExactField K>
NcPoly<Scalar<K>> random_poly(const K& field, std::mt19937_64& rng, std::size_t max_len = 3, std::size_t terms = 4) {
  std::uniform_int_distribution<int> letter(0, 2);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  NcPoly<Scalar<K>> p;
  for (std::size_t t = 0; t < terms; ++t) {
    Word w;
    for (std::size_t i = len(rng); i > 0; --i) w.push_back(static_cast<char>(letter(rng)));
    p.add_term(w, random_scalar(field, rng));
  }
  return p;
}

inline NcPoly<QZeta> word_poly(std::initializer_list<int> w, const QZeta& c = QZeta(1)) {
  return NcPoly<QZeta>::monomial(make_word(w), c);
}

}  // namespace skw::test
