// Fixed-parameter catalog entries: the standard U_q(sl(2)) with its three
// colour groups, the two-parameter U_{q,s}(gl(2)), and the three-parameter
// U_{q,s1,s2}(sl(3)+u(1)+u(1)).

#include <cmath>

#include "catalog_detail.hpp"

namespace colhopf::detail {

namespace {

// sum_n (1-q^-2)^n q^(n(n-1)/2) / [n]_q! * X^n (x) Y^n
TensorExpr sl2_series(const TensorExpr& x1, const TensorExpr& y2, Complex eta, int terms) {
  const Complex alpha = 1.0 - std::exp(-2.0 * eta);
  std::vector<TensorExpr> sum;
  for (int n = 0; n < terms; ++n) {
    const Complex c =
        std::pow(alpha, n) * std::exp(eta * (n * (n - 1) / 2.0)) / q_factorial_eta(n, eta);
    if (n == 0) {
      sum.push_back(one());
    } else {
      std::vector<TensorExpr> fs;
      for (int k = 0; k < n; ++k) fs.push_back(x1);
      for (int k = 0; k < n; ++k) fs.push_back(y2);
      sum.push_back(TensorExpr::scale(c, TensorExpr::prod(std::move(fs))));
    }
  }
  return TensorExpr::sum(std::move(sum));
}

// E_x(arg) truncated after `terms` terms, x = exp(eta_x).
TensorExpr q_exp_series(const TensorExpr& arg, Complex eta_x, int terms) {
  std::vector<TensorExpr> sum;
  for (int n = 0; n < terms; ++n) {
    const Complex c = q_exponential_coefficient(n, eta_x);
    sum.push_back(n == 0 ? one() : TensorExpr::scale(c, powern(arg, n)));
  }
  return TensorExpr::sum(std::move(sum));
}

std::map<GenId, ComplexMatrix> sl2_rep() {
  return {{"J3", ComplexMatrix::diagonal({0.5, -0.5})},
          {"J+", ComplexMatrix::unit(2, 0, 1)},
          {"J-", ComplexMatrix::unit(2, 1, 0)}};
}

// Residuals of [J3,J+-] = +-J+- and [J+,J-] = (q^(2J3)-q^(-2J3))/(q-q^-1).
std::vector<TensorExpr> sl2_relations(Complex eta) {
  const Complex qm = std::exp(eta) - std::exp(-eta);
  return {
      comm(a1("J3"), a1("J+")) - a1("J+"),
      comm(a1("J3"), a1("J-")) + a1("J-"),
      comm(a1("J+"), a1("J-")) -
          TensorExpr::scale(1.0 / qm, expc(2.0 * eta, a1("J3")) - expc(-2.0 * eta, a1("J3"))),
  };
}

// Delta_q and S_q shared by the sl(2) colourings.
HopfTables sl2_hopf(Complex eta) {
  HopfTables t;
  t.coproduct["J3"] = {{a1("J3"), one()}, {one(), a1("J3")}};
  for (const char* g : {"J+", "J-"})
    t.coproduct[g] = {{a1(g), expc(eta, a1("J3"))}, {expc(-eta, a1("J3")), a1(g)}};
  for (const char* g : {"J3", "J+", "J-"}) t.counit[g] = 0.0;
  t.antipode["J3"] = -a1("J3");
  t.antipode["J+"] = TensorExpr::scale(-std::exp(eta), a1("J+"));
  t.antipode["J-"] = TensorExpr::scale(-std::exp(-eta), a1("J-"));
  return t;
}

GenId jpm(int sign) { return sign > 0 ? "J+" : "J-"; }

ComplexMatrix sl2_R_same_sign(Complex q, Complex offdiag) {
  // [[q,0,0,0],[0,1,c,0],[0,0,1,0],[0,0,0,q]]
  ComplexMatrix r = ComplexMatrix::diagonal({q, 1.0, 1.0, q});
  r(1, 2) = offdiag;
  return r;
}

ComplexMatrix sl2_R_mixed_sign(Complex q, Complex corner) {
  // [[1,0,0,c],[0,q,0,0],[0,0,q,0],[0,0,0,1]]
  ComplexMatrix r = ComplexMatrix::diagonal({1.0, q, q, 1.0});
  r(0, 3) = corner;
  return r;
}

}  // namespace

EntryDef make_uq_sl2() {
  EntryDef e;
  e.id = "uq_sl2";
  e.generators = {"J3", "J+", "J-"};
  e.defaults.set("eta", 0.35);
  e.validate = [](const QParams& p) { require_q_regular(p); };
  e.rep_dim = 2;
  e.rep = [](const QParams&) { return sl2_rep(); };
  e.relations = [](const QParams& p) { return sl2_relations(p.eta()); };
  e.hopf = [](const QParams& p) { return sl2_hopf(p.eta()); };
  e.universal_R = [](const QParams& p, int extra) {
    const Complex eta = p.eta();
    const TensorExpr cartan = expc(2.0 * eta, a1("J3") * a2("J3"));
    const TensorExpr x1 = TensorExpr::prod({expc(eta, a1("J3")), a1("J+")});
    const TensorExpr y2 = TensorExpr::prod({expc(-eta, a2("J3")), a2("J-")});
    return cartan * sl2_series(x1, y2, eta, 2 + extra);
  };
  e.normalization = [](const QParams& p) { return std::exp(p.eta() / 2.0); };

  // --- S2 colouring: J3 -> nu J3, J+- -> J_{+-nu} ---
  ColouringDef s2;
  s2.id = "s2";
  s2.group = ColourGroupKind::S2;
  s2.gen_rules = [](const ColourPoint& nu) -> std::map<GenId, GenRule> {
    const int s = nu.sign();
    return {{"J3", {Complex(s), "J3"}}, {"J+", {1.0, jpm(s)}}, {"J-", {1.0, jpm(-s)}}};
  };
  s2.param_rule = [](const ColourPoint&, const QParams& p) { return p; };
  s2.closed_R = [](const QParams& p, const ColourPoint& l, const ColourPoint& m) {
    const Complex q = p.q();
    const Complex qm = q - 1.0 / q;
    const int sl = l.sign(), sm = m.sign();
    if (sl > 0 && sm > 0) return sl2_R_same_sign(q, qm);
    if (sl < 0 && sm < 0) return sl2_R_same_sign(q, qm).transpose();
    if (sl > 0 && sm < 0) return sl2_R_mixed_sign(q, qm);
    return sl2_R_mixed_sign(q, qm).transpose();
  };
  s2.explicit_maps = [](const QParams& p, const ColourPoint& l, const ColourPoint& m,
                        const ColourPoint& n) {
    const Complex eta = p.eta();
    const int lv = l.sign(), mv = m.sign(), nv = n.sign();
    HopfTables t;
    t.coproduct["J3"] = {{TensorExpr::scale(Complex(lv * nv), a1("J3")), one()},
                         {one(), TensorExpr::scale(Complex(mv * nv), a1("J3"))}};
    for (int pm : {1, -1})
      t.coproduct[jpm(pm)] = {{a1(jpm(pm * lv * nv)), expc(Complex(mv) * eta, a1("J3"))},
                              {expc(-Complex(lv) * eta, a1("J3")), a1(jpm(pm * mv * nv))}};
    for (const char* g : {"J3", "J+", "J-"}) t.counit[g] = 0.0;
    t.antipode["J3"] = TensorExpr::scale(Complex(-mv * nv), a1("J3"));
    for (int pm : {1, -1})
      t.antipode[jpm(pm)] =
          TensorExpr::scale(-std::exp(Complex(pm * nv) * eta), a1(jpm(pm * mv * nv)));
    return t;
  };
  e.colourings.push_back(std::move(s2));

  // --- Gl(1,C) colouring: J+- -> nu^{+-1} J+- ---
  ColouringDef gl1;
  gl1.id = "gl1";
  gl1.group = ColourGroupKind::GL1C;
  gl1.gen_rules = [](const ColourPoint& nu) -> std::map<GenId, GenRule> {
    return {{"J3", {1.0, "J3"}}, {"J+", {nu.c1(), "J+"}}, {"J-", {1.0 / nu.c1(), "J-"}}};
  };
  gl1.param_rule = [](const ColourPoint&, const QParams& p) { return p; };
  gl1.closed_R = [](const QParams& p, const ColourPoint& l, const ColourPoint& m) {
    const Complex q = p.q();
    return sl2_R_same_sign(q, l.c1() / m.c1() * (q - 1.0 / q));
  };
  gl1.explicit_maps = [](const QParams& p, const ColourPoint& l, const ColourPoint& m,
                         const ColourPoint& n) {
    const Complex eta = p.eta();
    const Complex lv = l.c1(), mv = m.c1(), nv = n.c1();
    HopfTables t;
    t.coproduct["J3"] = {{a1("J3"), one()}, {one(), a1("J3")}};
    t.coproduct["J+"] = {{TensorExpr::scale(lv / nv, a1("J+")), expc(eta, a1("J3"))},
                         {expc(-eta, a1("J3")), TensorExpr::scale(mv / nv, a1("J+"))}};
    t.coproduct["J-"] = {{TensorExpr::scale(nv / lv, a1("J-")), expc(eta, a1("J3"))},
                         {expc(-eta, a1("J3")), TensorExpr::scale(nv / mv, a1("J-"))}};
    for (const char* g : {"J3", "J+", "J-"}) t.counit[g] = 0.0;
    t.antipode["J3"] = -a1("J3");
    t.antipode["J+"] = TensorExpr::scale(-mv * std::exp(eta) / nv, a1("J+"));
    t.antipode["J-"] = TensorExpr::scale(-nv / (mv * std::exp(eta)), a1("J-"));
    return t;
  };
  e.colourings.push_back(std::move(gl1));

  // --- Gl(1,C) x| S2 colouring ---
  ColouringDef sd;
  sd.id = "semidirect";
  sd.group = ColourGroupKind::SemiDirect;
  sd.gen_rules = [](const ColourPoint& nu) -> std::map<GenId, GenRule> {
    const Complex n1 = nu.c1();
    const int n2 = nu.sign();
    const Complex n1s = n2 > 0 ? n1 : 1.0 / n1;  // n1^n2
    return {{"J3", {Complex(n2), "J3"}}, {"J+", {n1s, jpm(n2)}}, {"J-", {1.0 / n1s, jpm(-n2)}}};
  };
  sd.param_rule = [](const ColourPoint&, const QParams& p) { return p; };
  sd.closed_R = [](const QParams& p, const ColourPoint& l, const ColourPoint& m) {
    const Complex q = p.q();
    const Complex qm = q - 1.0 / q;
    const Complex l1 = l.c1(), m1 = m.c1();
    const int l2 = l.sign(), m2 = m.sign();
    if (l2 > 0 && m2 > 0) return sl2_R_same_sign(q, l1 / m1 * qm);
    if (l2 < 0 && m2 < 0) {
      ComplexMatrix r = sl2_R_same_sign(q, m1 / l1 * qm).transpose();
      return r;
    }
    if (l2 > 0 && m2 < 0) return sl2_R_mixed_sign(q, l1 * m1 * qm);
    return sl2_R_mixed_sign(q, 1.0 / (l1 * m1) * qm).transpose();
  };
  sd.explicit_maps = [](const QParams& p, const ColourPoint& l, const ColourPoint& m,
                        const ColourPoint& n) {
    const Complex eta = p.eta();
    const Complex l1 = l.c1(), m1 = m.c1(), n1 = n.c1();
    const int l2 = l.sign(), m2 = m.sign(), n2 = n.sign();
    auto ipow = [](Complex base, int exp) { return exp > 0 ? base : 1.0 / base; };
    HopfTables t;
    t.coproduct["J3"] = {{TensorExpr::scale(Complex(l2 * n2), a1("J3")), one()},
                         {one(), TensorExpr::scale(Complex(m2 * n2), a1("J3"))}};
    for (int pm : {1, -1})
      t.coproduct[jpm(pm)] = {
          {TensorExpr::scale(ipow(l1, pm * l2 * n2) * ipow(n1, -pm), a1(jpm(pm * l2 * n2))),
           expc(Complex(m2) * eta, a1("J3"))},
          {expc(-Complex(l2) * eta, a1("J3")),
           TensorExpr::scale(ipow(m1, pm * m2 * n2) * ipow(n1, -pm), a1(jpm(pm * m2 * n2)))}};
    for (const char* g : {"J3", "J+", "J-"}) t.counit[g] = 0.0;
    t.antipode["J3"] = TensorExpr::scale(Complex(-m2 * n2), a1("J3"));
    for (int pm : {1, -1})
      t.antipode[jpm(pm)] =
          TensorExpr::scale(-ipow(m1, pm * m2 * n2) * ipow(n1, -pm) * std::exp(Complex(pm * n2) * eta),
                            a1(jpm(pm * m2 * n2)));
    return t;
  };
  e.colourings.push_back(std::move(sd));

  return e;
}

EntryDef make_uqs_gl2() {
  EntryDef e;
  e.id = "uqs_gl2";
  e.generators = {"J3", "J+", "J-", "Z"};
  e.defaults.set("eta", 0.35).set("s", 1.3);
  e.validate = [](const QParams& p) {
    require_q_regular(p);
    require_nonzero_param(p, "s");
  };
  e.rep_dim = 2;
  e.rep = [](const QParams&) {
    auto r = sl2_rep();
    r["Z"] = ComplexMatrix::identity(2);
    return r;
  };
  e.relations = [](const QParams& p) {
    auto rels = sl2_relations(p.eta());
    for (const char* g : {"J3", "J+", "J-"}) rels.push_back(comm(a1("Z"), a1(g)));
    return rels;
  };
  e.hopf = [](const QParams& p) {
    const Complex eta = p.eta();
    const Complex ls = std::log(p.get("s"));
    HopfTables t;
    t.coproduct["J3"] = {{a1("J3"), one()}, {one(), a1("J3")}};
    t.coproduct["Z"] = {{a1("Z"), one()}, {one(), a1("Z")}};
    for (int pm : {1, -1}) {
      const Complex sgn(pm);
      // J+- (x) q^J3 (s/q)^(+-Z) + q^-J3 (qs)^(+-Z) (x) J+-
      t.coproduct[jpm(pm)] = {
          {a1(jpm(pm)),
           TensorExpr::prod({expc(eta, a1("J3")), expc(sgn * (ls - eta), a1("Z"))})},
          {TensorExpr::prod({expc(-eta, a1("J3")), expc(sgn * (ls + eta), a1("Z"))}),
           a1(jpm(pm))}};
    }
    for (const char* g : {"J3", "J+", "J-", "Z"}) t.counit[g] = 0.0;
    t.antipode["J3"] = -a1("J3");
    t.antipode["Z"] = -a1("Z");
    for (int pm : {1, -1})
      t.antipode[jpm(pm)] = TensorExpr::scale(
          -std::exp(Complex(pm) * eta),
          TensorExpr::prod({expc(Complex(-pm) * 2.0 * ls, a1("Z")), a1(jpm(pm))}));
    return t;
  };
  e.universal_R = [](const QParams& p, int extra) {
    const Complex eta = p.eta();
    const Complex ls = std::log(p.get("s"));
    const TensorExpr cartan =
        TensorExpr::func(Series::Exp,
                         TensorExpr::scale(2.0 * eta, a1("J3") * a2("J3") - a1("Z") * a2("J3") +
                                                          a1("J3") * a2("Z")));
    const TensorExpr x1 =
        TensorExpr::prod({expc(eta, a1("J3")), expc(-(eta + ls), a1("Z")), a1("J+")});
    const TensorExpr y2 =
        TensorExpr::prod({expc(-eta, a2("J3")), expc(ls - eta, a2("Z")), a2("J-")});
    return cartan * sl2_series(x1, y2, eta, 2 + extra);
  };
  e.normalization = [](const QParams& p) { return std::exp(p.eta() / 2.0); };

  ColouringDef gl1;
  gl1.id = "gl1";
  gl1.group = ColourGroupKind::GL1C;
  gl1.gen_rules = [](const ColourPoint& nu) -> std::map<GenId, GenRule> {
    return {{"J3", {1.0, "J3"}},
            {"J+", {1.0, "J+"}},
            {"J-", {1.0, "J-"}},
            {"Z", {nu.c1(), "Z"}}};
  };
  gl1.param_rule = [](const ColourPoint&, const QParams& p) { return p; };
  gl1.closed_R = [](const QParams& p, const ColourPoint& lp, const ColourPoint& mp) {
    const Complex eta = p.eta();
    const Complex ls = std::log(p.get("s"));
    const Complex l = lp.c1(), m = mp.c1();
    ComplexMatrix r = ComplexMatrix::diagonal(
        {std::exp(eta * (1.0 - l + m)), std::exp(eta * (l + m)), std::exp(eta * (-l - m)),
         std::exp(eta * (1.0 + l - m))});
    r(1, 2) = (std::exp(eta) - std::exp(-eta)) * std::exp(ls * (m - l));
    return r;
  };
  gl1.explicit_maps = [](const QParams& p, const ColourPoint& lp, const ColourPoint& mp,
                         const ColourPoint& np) {
    const Complex eta = p.eta();
    const Complex ls = std::log(p.get("s"));
    const Complex l = lp.c1(), m = mp.c1(), n = np.c1();
    HopfTables t;
    t.coproduct["J3"] = {{a1("J3"), one()}, {one(), a1("J3")}};
    t.coproduct["Z"] = {{TensorExpr::scale(l / n, a1("Z")), one()},
                        {one(), TensorExpr::scale(m / n, a1("Z"))}};
    for (int pm : {1, -1}) {
      const Complex sgn(pm);
      t.coproduct[jpm(pm)] = {
          {a1(jpm(pm)),
           TensorExpr::prod({expc(eta, a1("J3")), expc(sgn * m * (ls - eta), a1("Z"))})},
          {TensorExpr::prod({expc(-eta, a1("J3")), expc(sgn * l * (ls + eta), a1("Z"))}),
           a1(jpm(pm))}};
    }
    for (const char* g : {"J3", "J+", "J-", "Z"}) t.counit[g] = 0.0;
    t.antipode["J3"] = -a1("J3");
    t.antipode["Z"] = TensorExpr::scale(-m / n, a1("Z"));
    for (int pm : {1, -1})
      t.antipode[jpm(pm)] = TensorExpr::scale(
          -std::exp(Complex(pm) * eta),
          TensorExpr::prod({expc(Complex(-pm) * 2.0 * m * ls, a1("Z")), a1(jpm(pm))}));
    return t;
  };
  e.colourings.push_back(std::move(gl1));
  return e;
}

EntryDef make_uq_sl3_u1u1() {
  EntryDef e;
  e.id = "uq_sl3_u1u1";
  e.generators = {"H1", "H2", "X1+", "X2+", "X1-", "X2-", "Z1", "Z2"};
  e.defaults.set("eta", 0.3).set("s1", 1.2).set("s2", 0.8);
  e.validate = [](const QParams& p) {
    require_q_regular(p);
    require_nonzero_param(p, "s1");
    require_nonzero_param(p, "s2");
  };
  e.rep_dim = 3;
  e.rep = [](const QParams&) -> std::map<GenId, ComplexMatrix> {
    return {{"H1", ComplexMatrix::diagonal({1.0, -1.0, 0.0})},
            {"H2", ComplexMatrix::diagonal({0.0, 1.0, -1.0})},
            {"X1+", ComplexMatrix::unit(3, 0, 1)},
            {"X2+", ComplexMatrix::unit(3, 1, 2)},
            {"X1-", ComplexMatrix::unit(3, 1, 0)},
            {"X2-", ComplexMatrix::unit(3, 2, 1)},
            {"Z1", ComplexMatrix::identity(3)},
            {"Z2", ComplexMatrix::identity(3)}};
  };
  e.relations = [](const QParams& p) {
    const Complex eta = p.eta();
    const Complex qm = std::exp(eta) - std::exp(-eta);
    const Complex qh = std::exp(eta / 2.0), qhi = std::exp(-eta / 2.0);
    std::vector<TensorExpr> rels;
    rels.push_back(comm(a1("H1"), a1("H2")));
    const GenId h[2] = {"H1", "H2"};
    const GenId xp[2] = {"X1+", "X2+"};
    const GenId xm[2] = {"X1-", "X2-"};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Complex c = i == j ? 2.0 : -1.0;
        rels.push_back(comm(a1(h[i]), a1(xp[j])) - TensorExpr::scale(c, a1(xp[j])));
        rels.push_back(comm(a1(h[i]), a1(xm[j])) + TensorExpr::scale(c, a1(xm[j])));
      }
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        TensorExpr r = comm(a1(xp[i]), a1(xm[j]));
        if (i == j)
          r = r - TensorExpr::scale(1.0 / qm,
                                    expc(eta, a1(h[i])) - expc(-eta, a1(h[i])));
        rels.push_back(r);
      }
    // q-Serre relations through X3 = q^(1/2) X1 X2 - q^(-1/2) X2 X1.
    const TensorExpr x3p = TensorExpr::scale(qh, a1("X1+") * a1("X2+")) -
                           TensorExpr::scale(qhi, a1("X2+") * a1("X1+"));
    const TensorExpr x3m = TensorExpr::scale(qh, a1("X1-") * a1("X2-")) -
                           TensorExpr::scale(qhi, a1("X2-") * a1("X1-"));
    rels.push_back(TensorExpr::scale(qhi, a1("X1+") * x3p) -
                   TensorExpr::scale(qh, x3p * a1("X1+")));
    rels.push_back(TensorExpr::scale(qh, a1("X2+") * x3p) -
                   TensorExpr::scale(qhi, x3p * a1("X2+")));
    rels.push_back(TensorExpr::scale(qhi, a1("X1-") * x3m) -
                   TensorExpr::scale(qh, x3m * a1("X1-")));
    rels.push_back(TensorExpr::scale(qh, a1("X2-") * x3m) -
                   TensorExpr::scale(qhi, x3m * a1("X2-")));
    // Z1, Z2 are central.
    const GenId all[8] = {"H1", "H2", "X1+", "X2+", "X1-", "X2-", "Z1", "Z2"};
    for (const GenId& zz : {GenId("Z1"), GenId("Z2")})
      for (const GenId& g : all)
        if (g != zz && !(zz == "Z2" && g == "Z1")) rels.push_back(comm(a1(zz), a1(g)));
    return rels;
  };
  e.hopf = [](const QParams& p) {
    const Complex eta = p.eta();
    const Complex ls[2] = {std::log(p.get("s1")), std::log(p.get("s2"))};
    const GenId h[2] = {"H1", "H2"};
    const GenId z[2] = {"Z1", "Z2"};
    const GenId xp[2] = {"X1+", "X2+"};
    const GenId xm[2] = {"X1-", "X2-"};
    HopfTables t;
    for (int i = 0; i < 2; ++i) {
      t.coproduct[h[i]] = {{a1(h[i]), one()}, {one(), a1(h[i])}};
      t.coproduct[z[i]] = {{a1(z[i]), one()}, {one(), a1(z[i])}};
      // X_i^+- (x) q^(H_i/2) (q s_i)^(+-Z_i/2) + q^(-H_i/2) (s_i/q)^(+-Z_i/2) (x) X_i^+-
      for (int pm : {1, -1}) {
        const GenId& x = pm > 0 ? xp[i] : xm[i];
        const Complex sgn(pm);
        t.coproduct[x] = {
            {a1(x), TensorExpr::prod({expc(eta / 2.0, a1(h[i])),
                                      expc(sgn * (eta + ls[i]) / 2.0, a1(z[i]))})},
            {TensorExpr::prod({expc(-eta / 2.0, a1(h[i])),
                               expc(sgn * (ls[i] - eta) / 2.0, a1(z[i]))}),
             a1(x)}};
        t.antipode[x] = TensorExpr::scale(
            -std::exp(sgn * eta),
            TensorExpr::prod({expc(-sgn * ls[i], a1(z[i])), a1(x)}));
      }
      t.antipode[h[i]] = -a1(h[i]);
      t.antipode[z[i]] = -a1(z[i]);
    }
    for (const GenId& g :
         {GenId("H1"), GenId("H2"), GenId("X1+"), GenId("X2+"), GenId("X1-"), GenId("X2-"),
          GenId("Z1"), GenId("Z2")})
      t.counit[g] = 0.0;
    return t;
  };
  e.universal_R = [](const QParams& p, int extra) {
    const Complex eta = p.eta();
    const Complex ls[2] = {std::log(p.get("s1")), std::log(p.get("s2"))};
    const double ainv[2][2] = {{2.0 / 3.0, 1.0 / 3.0}, {1.0 / 3.0, 2.0 / 3.0}};
    const GenId h[2] = {"H1", "H2"};
    const GenId z[2] = {"Z1", "Z2"};
    const GenId xp[2] = {"X1+", "X2+"};
    const GenId xm[2] = {"X1-", "X2-"};

    std::vector<TensorExpr> cartan_terms;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        cartan_terms.push_back(TensorExpr::scale(ainv[i][j], a1(z[i]) * a2(h[j])));
        cartan_terms.push_back(TensorExpr::scale(-ainv[i][j], a1(h[i]) * a2(z[j])));
        cartan_terms.push_back(TensorExpr::scale(ainv[i][j], a1(h[i]) * a2(h[j])));
      }
    const TensorExpr cartan =
        TensorExpr::func(Series::Exp, TensorExpr::scale(eta, TensorExpr::sum(cartan_terms)));

    auto e_i = [&](int i) {
      return TensorExpr::prod({expc(eta / 2.0, a1(h[i])), expc(-(ls[i] - eta) / 2.0, a1(z[i])),
                               a1(xp[i])});
    };
    auto f_i = [&](int i) {
      return TensorExpr::prod({expc(-eta / 2.0, a2(h[i])), expc((ls[i] + eta) / 2.0, a2(z[i])),
                               a2(xm[i])});
    };
    const TensorExpr e1 = e_i(0), e2 = e_i(1), f1 = f_i(0), f2 = f_i(1);
    const Complex qinv = std::exp(-eta);
    const TensorExpr e3 = e1 * e2 - TensorExpr::scale(qinv, e2 * e1);
    const TensorExpr f3 = f1 * f2 - TensorExpr::scale(qinv, f2 * f1);
    const Complex alpha = 1.0 - std::exp(-2.0 * eta);
    const int terms = 3 + extra;
    return TensorExpr::prod(
        {cartan, q_exp_series(TensorExpr::scale(alpha, e1 * f1), -2.0 * eta, terms),
         q_exp_series(TensorExpr::scale(-alpha, e3 * f3), -2.0 * eta, terms),
         q_exp_series(TensorExpr::scale(alpha, e2 * f2), -2.0 * eta, terms)});
  };
  e.normalization = [](const QParams&) { return Complex(1.0); };

  ColouringDef pair;
  pair.id = "gl1_pair";
  pair.group = ColourGroupKind::GL1CPair;
  pair.gen_rules = [](const ColourPoint& nu) -> std::map<GenId, GenRule> {
    std::map<GenId, GenRule> r;
    for (const char* g : {"H1", "H2", "X1+", "X2+", "X1-", "X2-"}) r[g] = {1.0, g};
    r["Z1"] = {nu.c1(), "Z1"};
    r["Z2"] = {nu.c2(), "Z2"};
    return r;
  };
  pair.param_rule = [](const ColourPoint&, const QParams& p) { return p; };
  // No tabulated 9x9 closed form exists for this entry; acceptance is
  // property-based (YBE and the R-matrix identities).
  pair.explicit_maps = [](const QParams& p, const ColourPoint& lp, const ColourPoint& mp,
                          const ColourPoint& np) {
    const Complex eta = p.eta();
    const Complex ls[2] = {std::log(p.get("s1")), std::log(p.get("s2"))};
    const Complex l[2] = {lp.c1(), lp.c2()};
    const Complex m[2] = {mp.c1(), mp.c2()};
    const Complex n[2] = {np.c1(), np.c2()};
    const GenId h[2] = {"H1", "H2"};
    const GenId z[2] = {"Z1", "Z2"};
    const GenId xp[2] = {"X1+", "X2+"};
    const GenId xm[2] = {"X1-", "X2-"};
    HopfTables t;
    for (int i = 0; i < 2; ++i) {
      t.coproduct[h[i]] = {{a1(h[i]), one()}, {one(), a1(h[i])}};
      t.coproduct[z[i]] = {{TensorExpr::scale(l[i] / n[i], a1(z[i])), one()},
                           {one(), TensorExpr::scale(m[i] / n[i], a1(z[i]))}};
      for (int pm : {1, -1}) {
        const GenId& x = pm > 0 ? xp[i] : xm[i];
        const Complex sgn(pm);
        t.coproduct[x] = {
            {a1(x), TensorExpr::prod({expc(eta / 2.0, a1(h[i])),
                                      expc(sgn * m[i] * (eta + ls[i]) / 2.0, a1(z[i]))})},
            {TensorExpr::prod({expc(-eta / 2.0, a1(h[i])),
                               expc(sgn * l[i] * (ls[i] - eta) / 2.0, a1(z[i]))}),
             a1(x)}};
        t.antipode[x] = TensorExpr::scale(
            -std::exp(sgn * eta),
            TensorExpr::prod({expc(-sgn * m[i] * ls[i], a1(z[i])), a1(x)}));
      }
      t.antipode[h[i]] = -a1(h[i]);
      t.antipode[z[i]] = TensorExpr::scale(-m[i] / n[i], a1(z[i]));
    }
    for (const GenId& g :
         {GenId("H1"), GenId("H2"), GenId("X1+"), GenId("X2+"), GenId("X1-"), GenId("X2-"),
          GenId("Z1"), GenId("Z2")})
      t.counit[g] = 0.0;
    return t;
  };
  e.colourings.push_back(std::move(pair));
  return e;
}

}  // namespace colhopf::detail
