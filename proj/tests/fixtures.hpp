#pragma once

#include "qalg/poly.hpp"

namespace fixtures {

using namespace qalg;

/// k<a,b,c> over F_17 with the three dense quadratic relations whose quotient
/// has Hilbert series 1,3,6,9,9,0,0.
inline Presentation<PrimeField> dense_f17_example() {
  PrimeField f(17);
  Alphabet abc({"a", "b", "c"});
  auto rel = [&](std::initializer_list<std::pair<const char*, long long>> terms) {
    Polynomial<Fp> p;
    for (const auto& [ws, c] : terms) {
      Word w;
      for (const char* s = ws; *s; ++s) w.push_back(static_cast<uint8_t>(*s - 'a'));
      p.add(w, f.element(c));
    }
    return p;
  };
  Presentation<PrimeField> pres{f, abc, {}};
  pres.relations.push_back(rel({{"ac", 1}, {"ba", 2}, {"bb", 9}, {"ca", 3}, {"cb", 9}, {"cc", 8}}));
  pres.relations.push_back(rel({{"ab", 3},
                                {"ac", 5},
                                {"ba", 7},
                                {"bb", 1},
                                {"bc", 8},
                                {"ca", 4},
                                {"cb", 1},
                                {"cc", 2}}));
  pres.relations.push_back(rel({{"aa", 10},
                                {"ab", 2},
                                {"ac", 11},
                                {"ba", 2},
                                {"bb", 8},
                                {"bc", 4},
                                {"ca", 9},
                                {"cb", 7},
                                {"cc", 5}}));
  return pres;
}

/// k<y,x> / (xy - yx - y^2), the simplest algebra of the whole family.
template <class F>
Presentation<F> r11_presentation(const F& field) {
  Presentation<F> pres{field, Alphabet({"y", "x"}), {}};
  Polynomial<typename F::Coeff> p;
  p.add({1, 0}, field.element(1));
  p.add({0, 1}, field.element(-1));
  p.add({0, 0}, field.element(-1));
  pres.relations.push_back(std::move(p));
  return pres;
}

}  // namespace fixtures
