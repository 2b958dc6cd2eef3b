#ifndef QSYM_IO_HPP
#define QSYM_IO_HPP

#include "qsym/catalog.hpp"

#include <json.hpp>

namespace qsym::io {

using json = nlohmann::json;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/* "p/q" strings; integers are accepted on input */
json to_json(const Scalar& x);
Scalar scalar_from_json(const json& j);
json to_json(const Vec& v);
Vec vec_from_json(const json& j);
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/* {"dim", "basis", "brackets": [{"i", "j", "coeffs": [[k, "p/q"], ...]}]} */
json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const json& j);  // JacobiError on bad constants

/* algebra plus "form" and "theta" */
json metric_to_json(const MetricLieAlgebraWithInvolution& m);
MetricLieAlgebraWithInvolution metric_from_json(const json& j);  // AxiomError, JacobiError

/* algebra plus "theta"; a case name string ("h1", "abelian2", ...) is accepted on input */
json involutive_to_json(const InvolutiveLie& l);
InvolutiveLie involutive_from_json(const json& j);

json block_to_json(const BlockSpec& b);
BlockSpec block_from_json(const json& j);

/*
 * {"l", "theta_l", "rho", "form_a", "theta_a"}. On input "l" may be omitted when a base is given,
 * and {"l", "blocks", "padding"} builds the module with build_sum.
 */
json module_to_json(const OrthogonalModule& m);
OrthogonalModule module_from_json(const json& j, const std::optional<InvolutiveLie>& base = std::nullopt);

/* {"degree", "values": [{"indices", "value"}]}; scalar values when m = 1 */
json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const json& j, std::size_t n, std::size_t m);
/* {"alpha", "gamma"} */
json cocycle_to_json(const QuadraticCocycle& z);
QuadraticCocycle cocycle_from_json(const json& j, const OrthogonalModule& m);

/* metric JSON plus "markers": {"l_star", "a", "l"} */
json model_to_json(const StandardModel& d);

json params_to_json(Family f, const CatalogParams& p);
CatalogParams params_from_json(Family f, const json& j);
/* {"family": "3a", "params": {...}} */
json entry_to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const json& j);
/* model JSON plus "provenance": {"family", "params"} */
json instance_to_json(const Instance& inst);

json witness_to_json(const HermitianWitness& w);
HermitianWitness witness_from_json(const json& j);

json report_to_json(const SymmetricTripleReport& r);
json report_to_json(const ModuleReport& r);
json report_to_json(const AdmissibilityReport& r);

/* two-space indentation, sorted keys, trailing newline */
std::string dump(const json& j);
json parse(const std::string& text);
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

}  // namespace qsym::io

#endif
