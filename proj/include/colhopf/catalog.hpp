#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colhopf/colour.hpp"
#include "colhopf/expr.hpp"
#include "colhopf/matrix.hpp"
#include "colhopf/qarith.hpp"

namespace colhopf {

/// Uncoloured Hopf data of one algebra: coproduct as sums of pairs of
/// one-leg expressions, counit values (zero on every catalog generator),
/// and antipode expressions.
struct HopfTables {
  std::map<GenId, std::vector<std::pair<TensorExpr, TensorExpr>>> coproduct;
  std::map<GenId, Complex> counit;
  std::map<GenId, TensorExpr> antipode;
};

/// Coloured maps have the same shape as the uncoloured tables.
using ColouredMaps = HopfTables;

/// The effect of one colour point: a rescaling/permutation of generators and
/// the transformed deformation parameters.
struct ColourAction {
  std::map<GenId, GenRule> gen;
  QParams params;
};

/// How representation matrices are chosen when a universal R-matrix element
/// of H_{q^lambda} (x) H_{q^mu} is evaluated. PaperFixed builds every leg
/// from the base parameters and reproduces the tabulated closed forms;
/// LegParameter builds leg l from the parameters transformed by that leg's
/// colour, which satisfies all identities by construction. The two coincide
/// for every catalog entry except uh_sl2, whose representation depends on h.
enum class RepConvention { PaperFixed, LegParameter };

const char* convention_name(RepConvention c);
RepConvention convention_from_name(const std::string& name);

struct AlgebraSpec {
  std::string id;
  QParams params;
  std::vector<GenId> generators;
  int rep_dim = 0;
  std::map<GenId, ComplexMatrix> rep;
  std::vector<TensorExpr> relations;  // one-leg residuals, zero in any representation
  HopfTables hopf;
  TensorExpr universal_R;  // uncoloured 2-leg expression at `params`
  Complex normalization = 1.0;
  std::vector<std::string> colourings;
};

std::vector<std::string> algebra_ids();
QParams default_params(const std::string& id);

/// Throws std::invalid_argument on an unknown id or invalid parameters.
AlgebraSpec build_algebra(const std::string& id, const QParams& params);
AlgebraSpec build_algebra(const std::string& id);

/// Representation and relation residuals at arbitrary parameters (used for
/// colour-transformed checks).
std::map<GenId, ComplexMatrix> representation(const std::string& id, const QParams& params);
std::vector<TensorExpr> relation_residuals(const std::string& id, const QParams& params);

ColourGroupKind colouring_group(const AlgebraSpec& spec, const std::string& colouring);

/// sigma^nu as generator rules plus the transformed parameters.
ColourAction action(const AlgebraSpec& spec, const std::string& colouring, const ColourPoint& nu);

/// sigma^upper_lower = sigma^upper o (sigma^lower)^-1.
ColourAction action_between(const AlgebraSpec& spec, const std::string& colouring,
                            const ColourPoint& upper, const ColourPoint& lower);

/// The generic coloured maps
///   Delta^{lambda,mu}_{q,nu} = (sigma^lambda (x) sigma^mu) o Delta_q o sigma_nu,
///   epsilon_{q,nu} = epsilon_q o sigma_nu,
///   S^mu_{q,nu} = sigma^mu o S_q o sigma_nu.
ColouredMaps coloured_maps(const AlgebraSpec& spec, const std::string& colouring,
                           const ColourPoint& lambda, const ColourPoint& mu,
                           const ColourPoint& nu);

/// Explicit coloured-map tables, available for the fixed-parameter
/// entries as an independent cross-check; nullopt elsewhere.
std::optional<ColouredMaps> explicit_coloured_maps(const AlgebraSpec& spec,
                                                   const std::string& colouring,
                                                   const ColourPoint& lambda,
                                                   const ColourPoint& mu, const ColourPoint& nu);

/// R^{lambda,mu} = (sigma^lambda (x) sigma^mu)(R_q) as a 2-leg expression.
TensorExpr universal_R_expr(const AlgebraSpec& spec, const std::string& colouring,
                            const ColourPoint& lambda, const ColourPoint& mu);

/// The closed-form coloured R-matrix assembled entrywise; nullopt for
/// uq_sl3_u1u1, which has no tabulated closed form.
std::optional<ComplexMatrix> closed_form_R(const AlgebraSpec& spec, const std::string& colouring,
                                           const ColourPoint& lambda, const ColourPoint& mu);

/// normalization * (D (x) D)(R^{lambda,mu}) under the chosen convention.
ComplexMatrix coloured_R_matrix(const AlgebraSpec& spec, const std::string& colouring,
                                const ColourPoint& lambda, const ColourPoint& mu,
                                RepConvention convention);

namespace detail {
/// Universal R with the truncated series extended by `extra_terms` beyond the
/// nilpotency cutoff; used to test that the cutoff is exact.
TensorExpr universal_R_expr_terms(const AlgebraSpec& spec, const std::string& colouring,
                                  const ColourPoint& lambda, const ColourPoint& mu,
                                  int extra_terms);
}  // namespace detail

}  // namespace colhopf
