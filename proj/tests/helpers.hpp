// Small builders shared by the unit tests.
#pragma once

#include "dcalg/ncpoly.hpp"

namespace testing_helpers {

using namespace dcalg;

inline Symbol A(const char* name) { return Symbol(name, Sort::A); }
inline Symbol E(const char* name, int jet = 0) { return Symbol(name, Sort::E, jet); }
inline NCPoly P(const Symbol& s) { return NCPoly(s); }
inline NCPoly W(std::initializer_list<Symbol> f) { return NCPoly(Word(std::vector<Symbol>(f))); }
inline TensorPoly T1(const NCPoly& a) { return TensorPoly(a); }
inline TensorPoly T2(const NCPoly& a, const NCPoly& b) { return tensor(a, b); }
inline TensorPoly T3(const NCPoly& a, const NCPoly& b, const NCPoly& c) { return tensor(a, b, c); }
inline NCPoly one() { return NCPoly(1); }

}  // namespace testing_helpers
