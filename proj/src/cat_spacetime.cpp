// The quantum Euclidean algebra U_w(e(3)) and the null-plane Poincare
// algebra U_z(iso(3,1)).

#include <cmath>

#include "catalog_detail.hpp"

namespace colhopf::detail {

namespace {

constexpr Complex kI = Complex(0.0, 1.0);

ComplexMatrix units(int n, std::initializer_list<std::tuple<int, int, Complex>> terms) {
  ComplexMatrix m(n, n);
  for (const auto& [i, j, v] : terms) m(i, j) += v;
  return m;
}

std::map<GenId, ComplexMatrix> e3_rep() {
  return {
      {"J3", units(4, {{0, 1, -kI}, {1, 0, kI}})},
      {"J+", units(4, {{0, 2, -1.0}, {1, 2, -kI}, {2, 0, 1.0}, {2, 1, kI}})},
      {"J-", units(4, {{0, 2, 1.0}, {1, 2, -kI}, {2, 0, -1.0}, {2, 1, kI}})},
      {"P3", units(4, {{2, 3, 1.0}})},
      {"P+", units(4, {{0, 3, 1.0}, {1, 3, kI}})},
      {"P-", units(4, {{0, 3, 1.0}, {1, 3, -kI}})},
  };
}

std::map<GenId, ComplexMatrix> iso31_rep() {
  const Complex h = 0.5;
  return {
      {"K3", units(5, {{1, 4, 1.0}, {4, 1, 1.0}})},
      {"J3", units(5, {{2, 3, 1.0}, {3, 2, -1.0}})},
      {"P+", units(5, {{1, 0, h}, {4, 0, h}})},
      {"P-", units(5, {{1, 0, 1.0}, {4, 0, -1.0}})},
      {"P1", units(5, {{2, 0, 1.0}})},
      {"P2", units(5, {{3, 0, 1.0}})},
      {"E1", units(5, {{1, 2, h}, {2, 1, h}, {2, 4, -h}, {4, 2, h}})},
      {"E2", units(5, {{1, 3, h}, {3, 1, h}, {3, 4, -h}, {4, 3, h}})},
      {"F1", units(5, {{1, 2, 1.0}, {2, 1, 1.0}, {2, 4, 1.0}, {4, 2, -1.0}})},
      {"F2", units(5, {{1, 3, 1.0}, {3, 1, 1.0}, {3, 4, 1.0}, {4, 3, -1.0}})},
  };
}

void add_block(ComplexMatrix& r, int d, int bi, int bj, Complex coef, const ComplexMatrix& block) {
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r(bi * d + i, bj * d + j) += coef * block(i, j);
}

}  // namespace

EntryDef make_uw_e3() {
  EntryDef e;
  e.id = "uw_e3";
  e.generators = {"J3", "J+", "J-", "P3", "P+", "P-"};
  e.defaults.set("w", 0.25);
  e.validate = [](const QParams& p) { require_nonzero_param(p, "w"); };
  e.rep_dim = 4;
  e.rep = [](const QParams&) { return e3_rep(); };
  e.relations = [](const QParams& p) {
    const Complex w = p.get("w");
    // sinh(2wP3)/w and 2 cosh(2wP3) through exponentials
    const TensorExpr sinh_term =
        TensorExpr::scale(1.0 / (2.0 * w), expc(2.0 * w, a1("P3")) - expc(-2.0 * w, a1("P3")));
    const TensorExpr two_cosh = expc(2.0 * w, a1("P3")) + expc(-2.0 * w, a1("P3"));
    return std::vector<TensorExpr>{
        comm(a1("J3"), a1("J+")) - a1("J+"),
        comm(a1("J3"), a1("J-")) + a1("J-"),
        comm(a1("J+"), a1("J-")) - a1("J3") * two_cosh,
        comm(a1("J3"), a1("P+")) - a1("P+"),
        comm(a1("J3"), a1("P-")) + a1("P-"),
        comm(a1("P3"), a1("J+")) - a1("P+"),
        comm(a1("P3"), a1("J-")) + a1("P-"),
        comm(a1("J+"), a1("P-")) - sinh_term,
        comm(a1("J-"), a1("P+")) + sinh_term,
        comm(a1("J3"), a1("P3")),
        comm(a1("J+"), a1("P+")),
        comm(a1("J-"), a1("P-")),
        comm(a1("P3"), a1("P+")),
        comm(a1("P3"), a1("P-")),
        comm(a1("P+"), a1("P-")),
    };
  };
  e.hopf = [](const QParams& p) {
    const Complex w = p.get("w");
    HopfTables t;
    t.coproduct["J3"] = {{a1("J3"), one()}, {one(), a1("J3")}};
    t.coproduct["P3"] = {{a1("P3"), one()}, {one(), a1("P3")}};
    for (int pm : {1, -1}) {
      const GenId jg = pm > 0 ? "J+" : "J-";
      const GenId pg = pm > 0 ? "P+" : "P-";
      t.coproduct[jg] = {{a1(jg), expc(w, a1("P3"))},
                         {expc(-w, a1("P3")), a1(jg)},
                         {TensorExpr::scale(w, a1(pg)), expc(w, a1("P3")) * a1("J3")},
                         {TensorExpr::scale(-w, expc(-w, a1("P3")) * a1("J3")), a1(pg)}};
      t.coproduct[pg] = {{a1(pg), expc(w, a1("P3"))}, {expc(-w, a1("P3")), a1(pg)}};
      t.antipode[jg] = TensorExpr::sum(
          {-a1(jg), TensorExpr::scale(-Complex(pm) * 2.0 * w, a1(pg))});
      t.antipode[pg] = -a1(pg);
    }
    for (const char* g : {"J3", "J+", "J-", "P3", "P+", "P-"}) t.counit[g] = 0.0;
    t.antipode["J3"] = -a1("J3");
    t.antipode["P3"] = -a1("P3");
    return t;
  };
  e.universal_R = [](const QParams& p, int) {
    const Complex w = p.get("w");
    const TensorExpr qp = expc(w, a1("P3")) * a1("P+");
    const TensorExpr qm = expc(-w, a2("P3")) * a2("P-");
    const TensorExpr lp = expc(w, a1("P3")) * a1("J+");
    const TensorExpr lm = expc(-w, a2("P3")) * a2("J-");
    const TensorExpr A = TensorExpr::scale(w, qp * qm);
    const TensorExpr B = TensorExpr::sum(
        {TensorExpr::scale(w, lp * qm), TensorExpr::scale(w, qp * lm),
         TensorExpr::scale(-2.0 * w * w, qp * qm),
         TensorExpr::scale(-w * w, qp * (a2("J3") * qm)),
         TensorExpr::scale(w * w, (a1("J3") * qp) * qm)});
    // arcsinh(2wA)/(wA) = 2 * arcsinh_over_x(2wA)
    const TensorExpr g =
        TensorExpr::scale(2.0, TensorExpr::func(Series::ArcsinhOverX, TensorExpr::scale(2.0 * w, A)));
    return TensorExpr::prod(
        {expc(2.0 * w, a1("P3") * a2("J3") + a1("J3") * a2("P3")),
         TensorExpr::func(Series::Exp, B * g),
         TensorExpr::func(Series::InvSqrt1p4x2, TensorExpr::scale(w, A))});
  };
  e.normalization = [](const QParams&) { return Complex(1.0); };

  ColouringDef gl1r;
  gl1r.id = "gl1r";
  gl1r.group = ColourGroupKind::GL1R;
  gl1r.gen_rules = [](const ColourPoint& nu) -> std::map<GenId, GenRule> {
    const Complex v = nu.c1();
    return {{"J3", {1.0, "J3"}}, {"J+", {1.0, "J+"}}, {"J-", {1.0, "J-"}},
            {"P3", {v, "P3"}},   {"P+", {v, "P+"}},   {"P-", {v, "P-"}}};
  };
  gl1r.param_rule = [](const ColourPoint& nu, const QParams& p) {
    QParams out = p;
    out.set("w", nu.c1() * p.get("w"));
    return out;
  };
  gl1r.closed_R = [](const QParams& p, const ColourPoint& lp, const ColourPoint& mp) {
    const Complex w = p.get("w");
    const Complex l = lp.c1(), m = mp.c1();
    const auto rep = e3_rep();
    ComplexMatrix r = ComplexMatrix::identity(16);
    add_block(r, 4, 0, 1, -2.0 * kI * m * w, rep.at("P3"));
    add_block(r, 4, 0, 2, -2.0 * m * w, rep.at("P-"));
    add_block(r, 4, 0, 3, 2.0 * l * w, rep.at("J-"));
    add_block(r, 4, 1, 0, 2.0 * kI * m * w, rep.at("P3"));
    add_block(r, 4, 1, 2, -2.0 * kI * m * w, rep.at("P-"));
    add_block(r, 4, 1, 3, 2.0 * kI * l * w, rep.at("J-"));
    add_block(r, 4, 2, 0, 2.0 * m * w, rep.at("P-"));
    add_block(r, 4, 2, 1, 2.0 * kI * m * w, rep.at("P-"));
    add_block(r, 4, 2, 3, 2.0 * l * w, rep.at("J3"));
    return r;
  };
  e.colourings.push_back(std::move(gl1r));
  return e;
}

EntryDef make_uz_iso31() {
  EntryDef e;
  e.id = "uz_iso31";
  e.generators = {"K3", "J3", "P+", "P-", "P1", "P2", "E1", "E2", "F1", "F2"};
  e.defaults.set("z", 0.25);
  e.validate = [](const QParams& p) { require_nonzero_param(p, "z"); };
  e.rep_dim = 5;
  e.rep = [](const QParams&) { return iso31_rep(); };
  e.relations = [](const QParams& p) {
    const Complex z = p.get("z");
    // (e^(2zP+) - 1)/(2z) and P- + zP1^2 + zP2^2
    const TensorExpr plus_series =
        TensorExpr::scale(1.0 / (2.0 * z), expc(2.0 * z, a1("P+")) - one());
    const TensorExpr minus_term = TensorExpr::sum(
        {a1("P-"), TensorExpr::scale(z, a1("P1") * a1("P1")),
         TensorExpr::scale(z, a1("P2") * a1("P2"))});
    const TensorExpr j3exp = a1("J3") * expc(2.0 * z, a1("P+"));
    std::vector<TensorExpr> rels{
        comm(a1("K3"), a1("P+")) - plus_series,
        comm(a1("K3"), a1("P-")) + minus_term,
        comm(a1("K3"), a1("E1")) - a1("E1") * expc(2.0 * z, a1("P+")),
        comm(a1("K3"), a1("E2")) - a1("E2") * expc(2.0 * z, a1("P+")),
        comm(a1("K3"), a1("F1")) + a1("F1") + TensorExpr::scale(2.0 * z, a1("K3") * a1("P1")),
        comm(a1("K3"), a1("F2")) + a1("F2") + TensorExpr::scale(2.0 * z, a1("K3") * a1("P2")),
        comm(a1("J3"), a1("P1")) + a1("P2"),
        comm(a1("J3"), a1("P2")) - a1("P1"),
        comm(a1("J3"), a1("E1")) + a1("E2"),
        comm(a1("J3"), a1("E2")) - a1("E1"),
        comm(a1("J3"), a1("F1")) + a1("F2"),
        comm(a1("J3"), a1("F2")) - a1("F1"),
        comm(a1("E1"), a1("P1")) - plus_series,
        comm(a1("E2"), a1("P2")) - plus_series,
        comm(a1("E1"), a1("P2")),
        comm(a1("E2"), a1("P1")),
        comm(a1("F1"), a1("P1")) - minus_term,
        comm(a1("F2"), a1("P2")) - minus_term,
        comm(a1("F1"), a1("P2")),
        comm(a1("F2"), a1("P1")),
        comm(a1("E1"), a1("F1")) - a1("K3"),
        comm(a1("E2"), a1("F2")) - a1("K3"),
        comm(a1("E1"), a1("F2")) - j3exp,
        comm(a1("E2"), a1("F1")) + j3exp,
        comm(a1("P+"), a1("F1")) + a1("P1"),
        comm(a1("P+"), a1("F2")) + a1("P2"),
        comm(a1("F1"), a1("F2")) -
            TensorExpr::scale(2.0 * z, a1("P1") * a1("F2") - a1("P2") * a1("F1")),
        comm(a1("P-"), a1("E1")) + a1("P1"),
        comm(a1("P-"), a1("E2")) + a1("P2"),
    };
    // All remaining generator pairs commute.
    const std::pair<GenId, GenId> zero_pairs[] = {
        {"K3", "J3"}, {"K3", "P1"}, {"K3", "P2"}, {"J3", "P+"}, {"J3", "P-"},
        {"P+", "P-"}, {"P+", "P1"}, {"P+", "P2"}, {"P+", "E1"}, {"P+", "E2"},
        {"P-", "P1"}, {"P-", "P2"}, {"P-", "F1"}, {"P-", "F2"}, {"P1", "P2"},
        {"E1", "E2"}};
    for (const auto& [x, y] : zero_pairs) rels.push_back(comm(a1(x), a1(y)));
    return rels;
  };
  e.hopf = [](const QParams& p) {
    const Complex z = p.get("z");
    const TensorExpr eplus = expc(2.0 * z, a1("P+"));
    const TensorExpr eminus = expc(-2.0 * z, a1("P+"));
    HopfTables t;
    for (const char* g : {"J3", "P+", "E1", "E2"})
      t.coproduct[g] = {{a1(g), one()}, {one(), a1(g)}};
    for (const char* g : {"P-", "P1", "P2"})
      t.coproduct[g] = {{a1(g), eplus}, {one(), a1(g)}};
    t.coproduct["F1"] = {{a1("F1"), eplus},
                         {one(), a1("F1")},
                         {TensorExpr::scale(-2.0 * z, a1("P-")), a1("E1") * eplus},
                         {TensorExpr::scale(-2.0 * z, a1("P2")), a1("J3") * eplus}};
    t.coproduct["F2"] = {{a1("F2"), eplus},
                         {one(), a1("F2")},
                         {TensorExpr::scale(-2.0 * z, a1("P-")), a1("E2") * eplus},
                         {TensorExpr::scale(2.0 * z, a1("P1")), a1("J3") * eplus}};
    t.coproduct["K3"] = {{a1("K3"), eplus},
                         {one(), a1("K3")},
                         {TensorExpr::scale(-2.0 * z, a1("P1")), a1("E1") * eplus},
                         {TensorExpr::scale(-2.0 * z, a1("P2")), a1("E2") * eplus}};
    for (const GenId& g : {GenId("K3"), GenId("J3"), GenId("P+"), GenId("P-"), GenId("P1"),
                           GenId("P2"), GenId("E1"), GenId("E2"), GenId("F1"), GenId("F2")})
      t.counit[g] = 0.0;
    for (const char* g : {"J3", "P+", "E1", "E2"}) t.antipode[g] = -a1(g);
    for (const char* g : {"P-", "P1", "P2"}) t.antipode[g] = -(a1(g) * eminus);
    t.antipode["F1"] =
        -(TensorExpr::sum({a1("F1"), TensorExpr::scale(2.0 * z, a1("P-") * a1("E1")),
                           TensorExpr::scale(2.0 * z, a1("P2") * a1("J3"))}) *
          eminus);
    t.antipode["F2"] =
        -(TensorExpr::sum({a1("F2"), TensorExpr::scale(2.0 * z, a1("P-") * a1("E2")),
                           TensorExpr::scale(-2.0 * z, a1("P1") * a1("J3"))}) *
          eminus);
    t.antipode["K3"] =
        -(TensorExpr::sum({a1("K3"), TensorExpr::scale(2.0 * z, a1("P1") * a1("E1")),
                           TensorExpr::scale(2.0 * z, a1("P2") * a1("E2"))}) *
          eminus);
    return t;
  };
  e.universal_R = [](const QParams& p, int) {
    const Complex z = p.get("z");
    return TensorExpr::prod({expc(2.0 * z, a1("E2") * a2("P2")),
                             expc(2.0 * z, a1("E1") * a2("P1")),
                             expc(-2.0 * z, a1("P+") * a2("K3")),
                             expc(2.0 * z, a1("K3") * a2("P+")),
                             expc(-2.0 * z, a1("P1") * a2("E1")),
                             expc(-2.0 * z, a1("P2") * a2("E2"))});
  };
  e.normalization = [](const QParams&) { return Complex(1.0); };

  ColouringDef pair;
  pair.id = "gl1r_pair";
  pair.group = ColourGroupKind::GL1RPair;
  pair.gen_rules = [](const ColourPoint& nu) -> std::map<GenId, GenRule> {
    const Complex n1 = nu.c1(), n2 = nu.c2();
    return {{"K3", {1.0, "K3"}},      {"J3", {1.0, "J3"}},
            {"P+", {n1 * n2, "P+"}},  {"P-", {n1 / n2, "P-"}},
            {"P1", {n1, "P1"}},       {"P2", {n1, "P2"}},
            {"E1", {n2, "E1"}},       {"E2", {n2, "E2"}},
            {"F1", {1.0 / n2, "F1"}}, {"F2", {1.0 / n2, "F2"}}};
  };
  pair.param_rule = [](const ColourPoint& nu, const QParams& p) {
    QParams out = p;
    out.set("z", nu.c1() * nu.c2() * p.get("z"));
    return out;
  };
  pair.closed_R = [](const QParams& p, const ColourPoint& lp, const ColourPoint& mp) {
    const Complex z = p.get("z");
    const Complex l1 = lp.c1(), l2 = lp.c2(), m1 = mp.c1(), m2 = mp.c2();
    const auto rep = iso31_rep();
    ComplexMatrix r = ComplexMatrix::identity(25);
    add_block(r, 5, 1, 0, -l1 * l2 * z, rep.at("K3"));
    add_block(r, 5, 4, 0, -l1 * l2 * z, rep.at("K3"));
    add_block(r, 5, 2, 0, -2.0 * l1 * m2 * z, rep.at("E1"));
    add_block(r, 5, 3, 0, -2.0 * l1 * m2 * z, rep.at("E2"));
    add_block(r, 5, 1, 2, l2 * m1 * z, rep.at("P1"));
    add_block(r, 5, 2, 1, l2 * m1 * z, rep.at("P1"));
    add_block(r, 5, 2, 4, -l2 * m1 * z, rep.at("P1"));
    add_block(r, 5, 4, 2, l2 * m1 * z, rep.at("P1"));
    add_block(r, 5, 1, 3, l2 * m1 * z, rep.at("P2"));
    add_block(r, 5, 3, 1, l2 * m1 * z, rep.at("P2"));
    add_block(r, 5, 3, 4, -l2 * m1 * z, rep.at("P2"));
    add_block(r, 5, 4, 3, l2 * m1 * z, rep.at("P2"));
    add_block(r, 5, 1, 4, 2.0 * m1 * m2 * z, rep.at("P+"));
    add_block(r, 5, 4, 1, 2.0 * m1 * m2 * z, rep.at("P+"));
    return r;
  };
  e.colourings.push_back(std::move(pair));
  return e;
}

}  // namespace colhopf::detail
