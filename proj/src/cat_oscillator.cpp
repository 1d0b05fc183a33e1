// Varying-parameter entries built on nilpotent oscillator-type
// representations: the Jordanian U_h(sl(2)) and the standard, nonstandard-I,
// and nonstandard-II deformations of the oscillator algebra h(4).

#include <cmath>

#include "catalog_detail.hpp"

namespace colhopf::detail {

namespace {

// 3x3 oscillator representation shared by the three h(4) entries.
std::map<GenId, ComplexMatrix> h4_rep() {
  return {{"N", ComplexMatrix::unit(3, 1, 1)},
          {"M", ComplexMatrix::unit(3, 0, 2)},
          {"A+", ComplexMatrix::unit(3, 1, 2)},
          {"A-", ComplexMatrix::unit(3, 0, 1)}};
}

// Place coef * block into the (bi, bj) block of a matrix made of d x d blocks.
void add_block(ComplexMatrix& r, int d, int bi, int bj, Complex coef, const ComplexMatrix& block) {
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r(bi * d + i, bj * d + j) += coef * block(i, j);
}

}  // namespace

EntryDef make_uh_sl2() {
  EntryDef e;
  e.id = "uh_sl2";
  e.generators = {"A", "A+", "A-"};
  e.defaults.set("h", 0.3);
  e.validate = [](const QParams& p) { require_nonzero_param(p, "h"); };
  e.rep_dim = 2;
  e.rep = [](const QParams& p) -> std::map<GenId, ComplexMatrix> {
    const Complex h = p.get("h");
    return {{"A", ComplexMatrix(2, 2, {1.0, -h, 0.0, -1.0})},
            {"A+", ComplexMatrix::unit(2, 0, 1)},
            {"A-", ComplexMatrix(2, 2, {h, -h * h / 4.0, 1.0, 0.0})}};
  };
  e.relations = [](const QParams& p) {
    const Complex h = p.get("h");
    return std::vector<TensorExpr>{
        // [A, A+] = (e^(2hA+) - 1)/h
        comm(a1("A"), a1("A+")) -
            TensorExpr::scale(1.0 / h, expc(2.0 * h, a1("A+")) - one()),
        // [A, A-] = -2A- + hA^2
        comm(a1("A"), a1("A-")) + TensorExpr::scale(2.0, a1("A-")) -
            TensorExpr::scale(h, a1("A") * a1("A")),
        comm(a1("A+"), a1("A-")) - a1("A"),
    };
  };
  e.hopf = [](const QParams& p) {
    const Complex h = p.get("h");
    HopfTables t;
    t.coproduct["A+"] = {{a1("A+"), one()}, {one(), a1("A+")}};
    t.coproduct["A"] = {{a1("A"), expc(2.0 * h, a1("A+"))}, {one(), a1("A")}};
    t.coproduct["A-"] = {{a1("A-"), expc(2.0 * h, a1("A+"))}, {one(), a1("A-")}};
    for (const char* g : {"A", "A+", "A-"}) t.counit[g] = 0.0;
    t.antipode["A+"] = -a1("A+");
    t.antipode["A"] = -(a1("A") * expc(-2.0 * h, a1("A+")));
    t.antipode["A-"] = -(a1("A-") * expc(-2.0 * h, a1("A+")));
    return t;
  };
  e.universal_R = [](const QParams& p, int) {
    const Complex h = p.get("h");
    // exp{-h A+ (x) A} exp{h A (x) A+}
    return expc(-h, a1("A+") * a2("A")) * expc(h, a1("A") * a2("A+"));
  };
  e.normalization = [](const QParams&) { return Complex(1.0); };

  ColouringDef gl1;
  gl1.id = "gl1";
  gl1.group = ColourGroupKind::GL1C;
  gl1.gen_rules = [](const ColourPoint& nu) -> std::map<GenId, GenRule> {
    return {{"A", {1.0, "A"}}, {"A+", {nu.c1(), "A+"}}, {"A-", {1.0 / nu.c1(), "A-"}}};
  };
  gl1.param_rule = [](const ColourPoint& nu, const QParams& p) {
    QParams out = p;
    out.set("h", nu.c1() * p.get("h"));
    return out;
  };
  gl1.closed_R = [](const QParams& p, const ColourPoint& lp, const ColourPoint& mp) {
    const Complex h = p.get("h");
    const Complex l = lp.c1(), m = mp.c1();
    return ComplexMatrix(4, 4,
                         {1.0, m * h, -l * h, (l - m + l * m) * h * h,
                          0.0, 1.0, 0.0, l * h,
                          0.0, 0.0, 1.0, -m * h,
                          0.0, 0.0, 0.0, 1.0});
  };
  e.colourings.push_back(std::move(gl1));
  return e;
}

EntryDef make_uz_h4_std() {
  EntryDef e;
  e.id = "uz_h4_std";
  e.generators = {"N", "M", "A+", "A-"};
  e.defaults.set("z", 0.25);
  e.validate = [](const QParams& p) { require_nonzero_param(p, "z"); };
  e.rep_dim = 3;
  e.rep = [](const QParams&) { return h4_rep(); };
  e.relations = [](const QParams& p) {
    const Complex z = p.get("z");
    return std::vector<TensorExpr>{
        comm(a1("N"), a1("A+")) - a1("A+"),
        comm(a1("N"), a1("A-")) + a1("A-"),
        // [A-, A+] = sinh(zM)/z
        comm(a1("A-"), a1("A+")) -
            TensorExpr::scale(1.0 / (2.0 * z), expc(z, a1("M")) - expc(-z, a1("M"))),
        comm(a1("M"), a1("N")),
        comm(a1("M"), a1("A+")),
        comm(a1("M"), a1("A-")),
    };
  };
  e.hopf = [](const QParams& p) {
    const Complex z = p.get("z");
    HopfTables t;
    t.coproduct["N"] = {{a1("N"), one()}, {one(), a1("N")}};
    t.coproduct["M"] = {{a1("M"), one()}, {one(), a1("M")}};
    t.coproduct["A+"] = {{a1("A+"), one()}, {expc(-z, a1("M")), a1("A+")}};
    t.coproduct["A-"] = {{a1("A-"), expc(z, a1("M"))}, {one(), a1("A-")}};
    for (const char* g : {"N", "M", "A+", "A-"}) t.counit[g] = 0.0;
    t.antipode["N"] = -a1("N");
    t.antipode["M"] = -a1("M");
    t.antipode["A+"] = -(a1("A+") * expc(z, a1("M")));
    t.antipode["A-"] = -(a1("A-") * expc(-z, a1("M")));
    return t;
  };
  e.universal_R = [](const QParams& p, int) {
    const Complex z = p.get("z");
    // exp{-z M (x) N} exp{-z N (x) M} exp{2z A- (x) A+}
    return TensorExpr::prod({expc(-z, a1("M") * a2("N")), expc(-z, a1("N") * a2("M")),
                             expc(2.0 * z, a1("A-") * a2("A+"))});
  };
  e.normalization = [](const QParams&) { return Complex(1.0); };

  ColouringDef pair;
  pair.id = "gl1_pair";
  pair.group = ColourGroupKind::GL1CPair;
  pair.gen_rules = [](const ColourPoint& nu) -> std::map<GenId, GenRule> {
    return {{"N", {1.0, "N"}},
            {"M", {nu.c1() * nu.c2(), "M"}},
            {"A+", {nu.c1(), "A+"}},
            {"A-", {nu.c2(), "A-"}}};
  };
  pair.param_rule = [](const ColourPoint& nu, const QParams& p) {
    QParams out = p;
    out.set("z", nu.c1() * nu.c2() * p.get("z"));
    return out;
  };
  pair.closed_R = [](const QParams& p, const ColourPoint& lp, const ColourPoint& mp) {
    const Complex z = p.get("z");
    const Complex lplus = lp.c1(), lminus = lp.c2();
    const Complex mplus = mp.c1(), mminus = mp.c2();
    const auto rep = h4_rep();
    ComplexMatrix r = ComplexMatrix::identity(9);
    add_block(r, 3, 0, 1, 2.0 * lminus * mplus * z, rep.at("A+"));
    add_block(r, 3, 0, 2, -lplus * lminus * z, rep.at("N"));
    add_block(r, 3, 1, 1, -mplus * mminus * z, rep.at("M"));
    return r;
  };
  e.colourings.push_back(std::move(pair));
  return e;
}

EntryDef make_uz_h4_ns1() {
  EntryDef e;
  e.id = "uz_h4_ns1";
  e.generators = {"N", "M", "A+", "A-"};
  e.defaults.set("z", 0.25);
  e.validate = [](const QParams& p) { require_nonzero_param(p, "z"); };
  e.rep_dim = 3;
  e.rep = [](const QParams&) { return h4_rep(); };
  e.relations = [](const QParams& p) {
    const Complex z = p.get("z");
    return std::vector<TensorExpr>{
        // [N, A+] = (e^(zA+) - 1)/z
        comm(a1("N"), a1("A+")) - TensorExpr::scale(1.0 / z, expc(z, a1("A+")) - one()),
        comm(a1("N"), a1("A-")) + a1("A-"),
        // [A-, A+] = M e^(zA+)
        comm(a1("A-"), a1("A+")) - a1("M") * expc(z, a1("A+")),
        comm(a1("M"), a1("N")),
        comm(a1("M"), a1("A+")),
        comm(a1("M"), a1("A-")),
    };
  };
  e.hopf = [](const QParams& p) {
    const Complex z = p.get("z");
    HopfTables t;
    t.coproduct["N"] = {{a1("N"), expc(z, a1("A+"))}, {one(), a1("N")}};
    t.coproduct["M"] = {{a1("M"), one()}, {one(), a1("M")}};
    t.coproduct["A+"] = {{a1("A+"), one()}, {one(), a1("A+")}};
    t.coproduct["A-"] = {{a1("A-"), expc(z, a1("A+"))},
                         {one(), a1("A-")},
                         {TensorExpr::scale(z, a1("N")), a1("M") * expc(z, a1("A+"))}};
    for (const char* g : {"N", "M", "A+", "A-"}) t.counit[g] = 0.0;
    t.antipode["N"] = -(a1("N") * expc(-z, a1("A+")));
    t.antipode["M"] = -a1("M");
    t.antipode["A+"] = -a1("A+");
    t.antipode["A-"] = TensorExpr::sum(
        {-(a1("A-") * expc(-z, a1("A+"))),
         TensorExpr::scale(z, TensorExpr::prod({a1("N"), a1("M"), expc(-z, a1("A+"))}))});
    return t;
  };
  e.universal_R = [](const QParams& p, int) {
    const Complex z = p.get("z");
    return expc(-z, a1("A+") * a2("N")) * expc(z, a1("N") * a2("A+"));
  };
  e.normalization = [](const QParams&) { return Complex(1.0); };

  ColouringDef gl1;
  gl1.id = "gl1";
  gl1.group = ColourGroupKind::GL1C;
  gl1.gen_rules = [](const ColourPoint& nu) -> std::map<GenId, GenRule> {
    return {{"N", {1.0, "N"}},
            {"M", {nu.c1(), "M"}},
            {"A+", {nu.c1(), "A+"}},
            {"A-", {1.0, "A-"}}};
  };
  gl1.param_rule = [](const ColourPoint& nu, const QParams& p) {
    QParams out = p;
    out.set("z", nu.c1() * p.get("z"));
    return out;
  };
  gl1.closed_R = [](const QParams& p, const ColourPoint& lp, const ColourPoint& mp) {
    const Complex z = p.get("z");
    const auto rep = h4_rep();
    ComplexMatrix r = ComplexMatrix::identity(9);
    add_block(r, 3, 1, 1, mp.c1() * z, rep.at("A+"));
    add_block(r, 3, 1, 2, -lp.c1() * z, rep.at("N"));
    return r;
  };
  e.colourings.push_back(std::move(gl1));
  return e;
}

EntryDef make_u_h4_ns2() {
  EntryDef e;
  e.id = "u_h4_ns2";
  e.generators = {"N", "M", "A+", "A-"};
  e.defaults.set("theta", 0.3).set("beta_plus", 0.6).set("beta_minus", 0.45);
  e.validate = [](const QParams& p) {
    require_nonzero_param(p, "theta");
    require_nonzero_param(p, "beta_plus");
    require_nonzero_param(p, "beta_minus");
  };
  e.rep_dim = 3;
  e.rep = [](const QParams&) { return h4_rep(); };
  e.relations = [](const QParams& p) {
    const Complex th = p.get("theta");
    const Complex bp = p.get("beta_plus"), bm = p.get("beta_minus");
    // V(x) = (e^(xM) - 1 - xM)/x^2
    auto V = [&](Complex x) {
      return TensorExpr::scale(
          1.0 / (x * x),
          TensorExpr::sum({expc(x, a1("M")), -one(), TensorExpr::scale(-x, a1("M"))}));
    };
    return std::vector<TensorExpr>{
        comm(a1("N"), a1("A+")) - a1("A+") + TensorExpr::scale(bm, V(-th)),
        comm(a1("N"), a1("A-")) + a1("A-") + TensorExpr::scale(bp, V(th)),
        comm(a1("A-"), a1("A+")) - a1("M"),
        comm(a1("M"), a1("N")),
        comm(a1("M"), a1("A+")),
        comm(a1("M"), a1("A-")),
    };
  };
  e.hopf = [](const QParams& p) {
    const Complex th = p.get("theta");
    const Complex bp = p.get("beta_plus"), bm = p.get("beta_minus");
    HopfTables t;
    t.coproduct["N"] = {{a1("N"), one()},
                        {one(), a1("N")},
                        {TensorExpr::scale(bp / th, a1("A+")), one() - expc(-th, a1("M"))},
                        {TensorExpr::scale(bm / th, a1("A-")), one() - expc(th, a1("M"))}};
    t.coproduct["M"] = {{a1("M"), one()}, {one(), a1("M")}};
    t.coproduct["A+"] = {{a1("A+"), expc(-th, a1("M"))}, {one(), a1("A+")}};
    t.coproduct["A-"] = {{a1("A-"), expc(th, a1("M"))}, {one(), a1("A-")}};
    for (const char* g : {"N", "M", "A+", "A-"}) t.counit[g] = 0.0;
    t.antipode["N"] = TensorExpr::sum(
        {-a1("N"),
         TensorExpr::scale(-bp / th, a1("A+") * (one() - expc(th, a1("M")))),
         TensorExpr::scale(-bm / th, a1("A-") * (one() - expc(-th, a1("M"))))});
    t.antipode["M"] = -a1("M");
    t.antipode["A+"] = -(a1("A+") * expc(th, a1("M")));
    t.antipode["A-"] = -(a1("A-") * expc(-th, a1("M")));
    return t;
  };
  e.universal_R = [](const QParams& p, int) {
    const Complex th = p.get("theta");
    const Complex bp = p.get("beta_plus"), bm = p.get("beta_minus");
    auto K = [&](auto at) {
      return TensorExpr::sum({TensorExpr::scale(th, at("N")), TensorExpr::scale(bp, at("A+")),
                              TensorExpr::scale(bm, at("A-"))});
    };
    // exp{-M (x) (thN + b+A+ + b-A-)} exp{(thN + b+A+ + b-A-) (x) M}
    return expc(-1.0, a1("M") * K(a2)) *
           TensorExpr::func(Series::Exp, K(a1) * a2("M"));
  };
  e.normalization = [](const QParams&) { return Complex(1.0); };

  ColouringDef pair;
  pair.id = "gl1_pair";
  pair.group = ColourGroupKind::GL1CPair;
  pair.gen_rules = [](const ColourPoint& nu) -> std::map<GenId, GenRule> {
    return {{"N", {1.0, "N"}},
            {"M", {nu.c1() * nu.c2(), "M"}},
            {"A+", {nu.c1(), "A+"}},
            {"A-", {nu.c2(), "A-"}}};
  };
  pair.param_rule = [](const ColourPoint& nu, const QParams& p) {
    const Complex np = nu.c1(), nm = nu.c2();
    QParams out = p;
    out.set("theta", np * nm * p.get("theta"));
    out.set("beta_plus", np * np * nm * p.get("beta_plus"));
    out.set("beta_minus", np * nm * nm * p.get("beta_minus"));
    return out;
  };
  pair.closed_R = [](const QParams& p, const ColourPoint& lp, const ColourPoint& mp) {
    const Complex th = p.get("theta");
    const Complex bp = p.get("beta_plus"), bm = p.get("beta_minus");
    const Complex lplus = lp.c1(), lminus = lp.c2();
    const Complex mplus = mp.c1(), mminus = mp.c2();
    const auto rep = h4_rep();
    ComplexMatrix r = ComplexMatrix::identity(9);
    add_block(r, 3, 0, 1, lminus * mplus * mminus * bm, rep.at("M"));
    add_block(r, 3, 0, 2, -lplus * lminus * th, rep.at("N"));
    add_block(r, 3, 0, 2, -lplus * lminus * mplus * bp, rep.at("A+"));
    add_block(r, 3, 0, 2, -lplus * lminus * mminus * bm, rep.at("A-"));
    add_block(r, 3, 1, 1, mplus * mminus * th, rep.at("M"));
    add_block(r, 3, 1, 2, lplus * mplus * mminus * bp, rep.at("M"));
    return r;
  };
  e.colourings.push_back(std::move(pair));
  return e;
}

}  // namespace colhopf::detail
