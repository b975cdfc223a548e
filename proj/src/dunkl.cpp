#include "cherednik/dunkl.hpp"

namespace cherednik {

Multiplicity<ParamPoly> symbolic_multiplicity() { return {ParamPoly::var(0), ParamPoly::var(1)}; }

Multiplicity<QuadExt> evaluated_multiplicity(const Rat& k1, const Rat& k2) {
  return {QuadExt(k1), QuadExt(k2)};
}

ParamPoly hbar_formula(RootType type) {
  switch (type) {
    case RootType::A1: return ParamPoly::linear(QuadExt(Rat(1, 2)), QuadExt(1), QuadExt(0));
    case RootType::A2: return ParamPoly::linear(QuadExt(1), QuadExt(3), QuadExt(0));
    case RootType::B2: return ParamPoly::linear(QuadExt(1), QuadExt(2), QuadExt(2));
    case RootType::G2: return ParamPoly::linear(QuadExt(1), QuadExt(3), QuadExt(3));
  }
  return {};
}

void check_hbar_calibration(RootType type) {
  const RootSystem& rs = root_system(type);
  const auto k = symbolic_multiplicity();
  const ParamPoly expected = hbar_formula(type);
  if (!(hbar(rs, k) == expected))
    throw invariant_violation(type_label(type) + ": l/2 + a_triv(k) = " + hbar(rs, k).str() +
                              ", expected " + expected.str());
  Sl2Triple<ParamPoly> sl2(rs, k);
  KPoly fe = sl2.apply_F(sl2.E());
  if (!(fe == KPoly::constant(-expected)))
    throw invariant_violation(type_label(type) + ": F(E) = " + fe.str() + ", expected -hbar");
}

}  // namespace cherednik
