#pragma once

#include <functional>

#include "colhopf/catalog.hpp"

namespace colhopf::detail {

struct ColouringDef {
  std::string id;
  ColourGroupKind group;
  std::function<std::map<GenId, GenRule>(const ColourPoint&)> gen_rules;
  std::function<QParams(const ColourPoint&, const QParams&)> param_rule;
  // Entrywise closed-form coloured R-matrix; empty where none is tabulated.
  std::function<ComplexMatrix(const QParams&, const ColourPoint&, const ColourPoint&)> closed_R;
  // Explicit coloured-map tables, carried by the fixed-parameter entries
  // as an independent cross-check of the generic construction.
  std::function<HopfTables(const QParams&, const ColourPoint&, const ColourPoint&,
                           const ColourPoint&)>
      explicit_maps;
};

struct EntryDef {
  std::string id;
  std::vector<GenId> generators;
  QParams defaults;
  std::function<void(const QParams&)> validate;
  int rep_dim = 0;
  std::function<std::map<GenId, ComplexMatrix>(const QParams&)> rep;
  std::function<std::vector<TensorExpr>(const QParams&)> relations;
  std::function<HopfTables(const QParams&)> hopf;
  std::function<TensorExpr(const QParams&, int extra_terms)> universal_R;
  std::function<Complex(const QParams&)> normalization;
  std::vector<ColouringDef> colourings;
};

EntryDef make_uq_sl2();
EntryDef make_uqs_gl2();
EntryDef make_uq_sl3_u1u1();
EntryDef make_uh_sl2();
EntryDef make_uz_h4_std();
EntryDef make_uz_h4_ns1();
EntryDef make_u_h4_ns2();
EntryDef make_uw_e3();
EntryDef make_uz_iso31();

const EntryDef& entry(const std::string& id);

// --- expression shorthands used across the entry builders ---

inline TensorExpr a1(const GenId& g) { return TensorExpr::atom(1, g); }
inline TensorExpr a2(const GenId& g) { return TensorExpr::atom(2, g); }
inline TensorExpr lit(Complex c) { return TensorExpr::scalar(c); }
inline TensorExpr one() { return TensorExpr::scalar(1.0); }

/// exp(c * x)
inline TensorExpr expc(Complex c, const TensorExpr& x) {
  return TensorExpr::func(Series::Exp, TensorExpr::scale(c, x));
}

/// x*y - y*x
inline TensorExpr comm(const TensorExpr& x, const TensorExpr& y) {
  return TensorExpr::prod({x, y}) - TensorExpr::prod({y, x});
}

/// x^n as an explicit product; n = 0 gives the scalar 1.
inline TensorExpr powern(const TensorExpr& x, int n) {
  if (n == 0) return one();
  std::vector<TensorExpr> fs(static_cast<std::size_t>(n), x);
  return TensorExpr::prod(std::move(fs));
}

inline void require_nonzero_param(const QParams& p, const std::string& name) {
  if (p.get(name) == Complex(0.0))
    throw std::invalid_argument("parameter '" + name + "' must be nonzero");
}

/// Checks q = exp(eta) != +-1, the poles of the q-number denominator.
inline void require_q_regular(const QParams& p) {
  const Complex q = std::exp(p.get("eta"));
  if (std::abs(q - 1.0) < 1e-9 || std::abs(q + 1.0) < 1e-9)
    throw std::invalid_argument("eta gives q = exp(eta) too close to +-1");
}

}  // namespace colhopf::detail
