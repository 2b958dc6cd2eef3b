#ifndef QSYM_CATALOG_HPP
#define QSYM_CATALOG_HPP

#include "qsym/admissibility.hpp"
#include "qsym/extension.hpp"

namespace qsym {

enum class Family { f1a, f1b, f1c, f2a, f2b, f2c, f3a, f3b, f3c, f3d, f4a, f4b, f4c, f4d, f5a, f5b, f6, f7, f8 };

std::string family_name(Family f);  // "1a", ..., "8"
std::optional<Family> family_from_name(const std::string& s);
const std::vector<Family>& all_families();
CaseTag family_case(Family f);

/* Fields a family does not use must stay at their defaults. */
struct CatalogParams {
    std::vector<Vec> lambda, mu;  // functionals on l0 = l/l', values on its standard basis
    Scalar nu = 0;                // 1c
    int kappa = 1;                // 3a, 4a
    Scalar r = 1;                 // 3d, 4d
    Scalar c = 0;                 // 6, 7, 8
    std::vector<int> k, l, m;     // 6, 8
    std::size_t p = 0;            // 7
    bool operator==(const CatalogParams& o) const = default;
};

struct CatalogEntry {
    Family family = Family::f1a;
    CatalogParams params;
    bool operator==(const CatalogEntry& o) const = default;
};
std::string entry_label(const CatalogEntry& e);

struct Validation {
    bool ok = true;
    std::vector<std::string> diagnostics;
};
Validation validate_params(const CatalogEntry& e);

/* Orbit representative under the family's equivalence; throws std::invalid_argument on a hard-constraint violation. */
CatalogEntry canonicalize_params(Family f, const CatalogParams& raw);

/* Module and cocycle as listed, no verification. */
struct EntryData {
    InvolutiveLie l;
    std::array<std::size_t, 4> padding{0, 0, 0, 0};
    std::vector<BlockSpec> blocks;
    OrthogonalModule a;
    QuadraticCocycle z;
};
EntryData entry_data(const CatalogEntry& e);

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Instance {
    CatalogEntry entry;
    EntryData data;
    StandardModel model;
    Subspace ideal;  // canonical_ideal of the model
    AdmissibilityReport admissibility;
};
/* Empty when the model is a symmetric triple of index 2 with i(g) = l*, admissible and indecomposable. */
std::string instance_violation(const Instance& inst);
/* Throws std::invalid_argument for an invalid entry, CatalogError when verification fails. */
Instance instantiate(const CatalogEntry& e);

/* F_l^2 = theta_l, F_l = Id on l+, F_a^2 = theta_a, F_a = Id on a+, (F_l, F_a^-1) a morphism fixing (alpha, gamma). */
struct HermitianWitness {
    Matrix F_l;
    Matrix F_a;
};
std::string hermitian_violation(const OrthogonalModule& m, const QuadraticCocycle& z, const HermitianWitness& w);
bool hermitian_verify(const OrthogonalModule& m, const QuadraticCocycle& z, const HermitianWitness& w);
bool hermitian_verify(const CatalogEntry& e, const HermitianWitness& w);
bool in_hermitian_list(const CatalogEntry& e);
/* Constructed blockwise; throws std::invalid_argument outside the Hermitian sublist. */
HermitianWitness hermitian_witness_for(const CatalogEntry& e);
/*
 * F_l ranges over complex structures on l- with integer entries in [-bound, bound] (Id on l+) that are
 * automorphisms; F_a over the solutions of the linear conditions, combined with coefficients in {-1, 0, 1}.
 */
std::optional<HermitianWitness> hermitian_witness_search(const OrthogonalModule& m, const QuadraticCocycle& z,
                                                         int bound = 2);

struct DeskLimits {
    std::size_t max_pq = 1;                    // p, q for the one-parameter families
    std::size_t max_pq_plane = 2;              // p + q for 2(b), 2(c), 5(a), 5(b); 2(a) uses exactly 3
    std::vector<Scalar> weights{1, 2};         // positive weight values
    std::vector<Scalar> r_values{1, 2};        // 3d, 4d
    std::vector<Scalar> c_values{0, 1};        // 6, 7, 8
    std::size_t max_index_sum = 4;             // |k| + |l| + 2|m| for 6, 8
    std::size_t max_p7 = 1;                    // 7
    std::size_t max_dim = 0;                   // bound on dim g, 0 for none
};
/* Deterministic; canonical valid entries, deduplicated, in family order. */
std::vector<CatalogEntry> desk_suite(const DeskLimits& lim = {});
std::size_t model_dimension(const EntryData& d);

/*
 * Case of g / i(g)^perp, dim g, signatures of g and g-, derived and lower central series dims,
 * dims of a^l+ and a^l-, the weight data of a read in the standard basis of l0 (semisimple l:
 * spectra of rho(l+) on a+ and a-), and the normal-form coordinate of the class.
 */
struct InvariantVector {
    std::vector<long> numbers;
    std::vector<std::string> weights;
    std::string class_datum;
    bool operator==(const InvariantVector& o) const = default;
    std::string str() const;
};
InvariantVector invariant_vector(const Instance& inst);

struct Collision {
    CatalogEntry a, b;
};
std::vector<Collision> invariant_collisions(const std::vector<Instance>& insts);

}  // namespace qsym

#endif
