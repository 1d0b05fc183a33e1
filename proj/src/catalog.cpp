#include "colhopf/catalog.hpp"

#include <stdexcept>

#include "catalog_detail.hpp"

namespace colhopf {

namespace detail {

namespace {

const std::vector<EntryDef>& registry() {
  static const std::vector<EntryDef> entries = [] {
    std::vector<EntryDef> v;
    v.push_back(make_uq_sl2());
    v.push_back(make_uqs_gl2());
    v.push_back(make_uq_sl3_u1u1());
    v.push_back(make_uh_sl2());
    v.push_back(make_uz_h4_std());
    v.push_back(make_uz_h4_ns1());
    v.push_back(make_u_h4_ns2());
    v.push_back(make_uw_e3());
    v.push_back(make_uz_iso31());
    return v;
  }();
  return entries;
}

const ColouringDef& colouring_def(const std::string& algebra_id, const std::string& colouring) {
  for (const auto& c : entry(algebra_id).colourings)
    if (c.id == colouring) return c;
  throw std::invalid_argument("no colouring '" + colouring + "' registered for algebra '" +
                              algebra_id + "'");
}

}  // namespace

const EntryDef& entry(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown algebra id '" + id + "'");
}

}  // namespace detail

const char* convention_name(RepConvention c) {
  return c == RepConvention::PaperFixed ? "paper-fixed" : "leg-parameter";
}

RepConvention convention_from_name(const std::string& name) {
  if (name == "paper-fixed") return RepConvention::PaperFixed;
  if (name == "leg-parameter") return RepConvention::LegParameter;
  throw std::invalid_argument("unknown convention '" + name +
                              "' (expected paper-fixed or leg-parameter)");
}

std::vector<std::string> algebra_ids() {
  std::vector<std::string> ids;
  ids.reserve(9);
  for (const char* id : {"uq_sl2", "uqs_gl2", "uq_sl3_u1u1", "uh_sl2", "uz_h4_std", "uz_h4_ns1",
                         "u_h4_ns2", "uw_e3", "uz_iso31"})
    ids.emplace_back(id);
  return ids;
}

QParams default_params(const std::string& id) { return detail::entry(id).defaults; }

AlgebraSpec build_algebra(const std::string& id, const QParams& params) {
  const auto& def = detail::entry(id);
  // Fill omitted parameters from defaults; reject unknown names.
  QParams merged = def.defaults;
  for (const auto& [name, value] : params.values()) {
    if (!def.defaults.has(name))
      throw std::invalid_argument("algebra '" + id + "' has no parameter '" + name + "'");
    merged.set(name, value);
  }
  def.validate(merged);

  AlgebraSpec spec;
  spec.id = def.id;
  spec.params = merged;
  spec.generators = def.generators;
  spec.rep_dim = def.rep_dim;
  spec.rep = def.rep(merged);
  spec.relations = def.relations(merged);
  spec.hopf = def.hopf(merged);
  spec.universal_R = def.universal_R(merged, 0);
  spec.normalization = def.normalization(merged);
  for (const auto& c : def.colourings) spec.colourings.push_back(c.id);
  return spec;
}

AlgebraSpec build_algebra(const std::string& id) { return build_algebra(id, QParams()); }

std::map<GenId, ComplexMatrix> representation(const std::string& id, const QParams& params) {
  const auto& def = detail::entry(id);
  def.validate(params);
  return def.rep(params);
}

std::vector<TensorExpr> relation_residuals(const std::string& id, const QParams& params) {
  return detail::entry(id).relations(params);
}

ColourGroupKind colouring_group(const AlgebraSpec& spec, const std::string& colouring) {
  return detail::colouring_def(spec.id, colouring).group;
}

ColourAction action(const AlgebraSpec& spec, const std::string& colouring,
                    const ColourPoint& nu) {
  const auto& def = detail::colouring_def(spec.id, colouring);
  if (nu.kind() != def.group)
    throw std::invalid_argument("colour point belongs to the wrong group for colouring '" +
                                colouring + "'");
  return ColourAction{def.gen_rules(nu), def.param_rule(nu, spec.params)};
}

ColourAction action_between(const AlgebraSpec& spec, const std::string& colouring,
                            const ColourPoint& upper, const ColourPoint& lower) {
  return action(spec, colouring, compose(upper, invert(lower)));
}

ColouredMaps coloured_maps(const AlgebraSpec& spec, const std::string& colouring,
                           const ColourPoint& lambda, const ColourPoint& mu,
                           const ColourPoint& nu) {
  const auto rules_l = action(spec, colouring, lambda).gen;
  const auto rules_m = action(spec, colouring, mu).gen;
  const auto rules_nu_inv = action(spec, colouring, invert(nu)).gen;

  ColouredMaps maps;
  for (const GenId& g : spec.generators) {
    const GenRule& via = rules_nu_inv.at(g);  // sigma_nu(g) = coeff * target
    const auto& pairs = spec.hopf.coproduct.at(via.target);
    auto& out = maps.coproduct[g];
    out.reserve(pairs.size());
    for (const auto& [a, b] : pairs)
      out.emplace_back(TensorExpr::scale(via.coeff, map_generators(a, rules_l)),
                       map_generators(b, rules_m));
    maps.counit[g] = via.coeff * spec.hopf.counit.at(via.target);
    maps.antipode[g] =
        TensorExpr::scale(via.coeff, map_generators(spec.hopf.antipode.at(via.target), rules_m));
  }
  return maps;
}

std::optional<ColouredMaps> explicit_coloured_maps(const AlgebraSpec& spec,
                                                   const std::string& colouring,
                                                   const ColourPoint& lambda,
                                                   const ColourPoint& mu, const ColourPoint& nu) {
  const auto& def = detail::colouring_def(spec.id, colouring);
  if (!def.explicit_maps) return std::nullopt;
  return def.explicit_maps(spec.params, lambda, mu, nu);
}

TensorExpr universal_R_expr(const AlgebraSpec& spec, const std::string& colouring,
                            const ColourPoint& lambda, const ColourPoint& mu) {
  return detail::universal_R_expr_terms(spec, colouring, lambda, mu, 0);
}

std::optional<ComplexMatrix> closed_form_R(const AlgebraSpec& spec, const std::string& colouring,
                                           const ColourPoint& lambda, const ColourPoint& mu) {
  const auto& def = detail::colouring_def(spec.id, colouring);
  if (!def.closed_R) return std::nullopt;
  return def.closed_R(spec.params, lambda, mu);
}

ComplexMatrix coloured_R_matrix(const AlgebraSpec& spec, const std::string& colouring,
                                const ColourPoint& lambda, const ColourPoint& mu,
                                RepConvention convention) {
  const TensorExpr expr = universal_R_expr(spec, colouring, lambda, mu);
  const int d = spec.rep_dim;
  AtomAssignment asg({d, d});
  const auto rep1 = convention == RepConvention::PaperFixed
                        ? spec.rep
                        : representation(spec.id, action(spec, colouring, lambda).params);
  const auto rep2 = convention == RepConvention::PaperFixed
                        ? spec.rep
                        : representation(spec.id, action(spec, colouring, mu).params);
  for (const GenId& g : spec.generators) {
    asg.assign(1, g, rep1.at(g));
    asg.assign(2, g, rep2.at(g));
  }
  ComplexMatrix r = eval_hom(expr, asg);
  r *= spec.normalization;
  return r;
}

namespace detail {

TensorExpr universal_R_expr_terms(const AlgebraSpec& spec, const std::string& colouring,
                                  const ColourPoint& lambda, const ColourPoint& mu,
                                  int extra_terms) {
  const TensorExpr base = entry(spec.id).universal_R(spec.params, extra_terms);
  const auto rules_l = action(spec, colouring, lambda).gen;
  const auto rules_m = action(spec, colouring, mu).gen;
  return map_generators(base, [&](int leg, const GenId& g) {
    const auto& rules = leg == 1 ? rules_l : rules_m;
    auto it = rules.find(g);
    if (it == rules.end())
      throw std::invalid_argument("universal_R_expr: unmapped generator '" + g + "'");
    return it->second;
  });
}

}  // namespace detail

}  // namespace colhopf
