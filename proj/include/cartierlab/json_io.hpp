#ifndef CARTIERLAB_JSON_IO_HPP
#define CARTIERLAB_JSON_IO_HPP

#include <json.hpp>

#include "cartierlab/cartier.hpp"
#include "cartierlab/fgl.hpp"
#include "cartierlab/legendre.hpp"
#include "cartierlab/nilpotent.hpp"

namespace cartierlab {

using json = nlohmann::json;

// Values: integers and residues as decimal strings, rationals as "a/b",
// polynomials as coefficient arrays (constant term first). Ring specs use
// the string grammar "Z" | "Q" | "Z/<m>" | "<base>[<var>]".

json value_to_json(const RingValue& v);
RingValue value_from_json(const RingSpec& spec, const json& j);

json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

json witt_to_json(const WittVector& w);
WittVector witt_from_json(const json& j);
/// Variant that takes ring/k from the surrounding context when the payload
/// only carries "b".
WittVector witt_from_json(const json& j, const RingSpec& spec, int k);

json fgl_to_json(const FormalGroupLaw& F);
FormalGroupLaw fgl_from_json(const json& j);

json form_to_json(const InvariantForm& w);
InvariantForm form_from_json(const json& j);

json cartier_to_json(const CartierElement& e);
CartierElement cartier_from_json(const json& j);

json algebra_to_json(const NilpotentAlgebra& a);
NilpotentAlgebra algebra_from_json(const json& j);

json lambda_to_json(const LambdaElement& u);
LambdaElement lambda_from_json(const json& j,
                               std::shared_ptr<const NilpotentAlgebra> algebra);

json congruence_report_to_json(const CongruenceReport& r);
json central_binom_report_to_json(const CentralBinomReport& r);
json sweep_report_to_json(const SweepReport& r);

}  // namespace cartierlab

#endif
