#ifndef LCKV_CATALOG_HPP
#define LCKV_CATALOG_HPP

#include "lckv/hermitian.hpp"
#include "lckv/lck.hpp"
#include "lckv/lie_algebra.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lckv {

struct JRecord {
    std::string name;
    std::vector<std::string> matrix;  // n*n expressions, row-major, coframe action
    std::string note;
};

struct LcKFamily {
    enum class Vaisman { Always, Never, Conditional };
    std::string id, J, theta, omega, note;
    Assignment fixed;  // parameters specialised for this row
    std::vector<std::string> constraints;
    std::vector<Assignment> witnesses;
    Vaisman vaisman = Vaisman::Never;
    std::vector<std::string> vaisman_if;      // conjunction of equalities
    std::vector<std::string> vaisman_vector;  // expected A, optional
};

struct NoLcKRecord {
    enum class Kind { Vector, Combination, Degenerate };
    std::string id, J, theta_family, note;
    std::vector<std::string> constraints;
    Kind kind = Kind::Vector;
    int vector = 0;
    std::vector<std::pair<mpq_class, int>> combination;  // (weight, 1-based index)
};

struct DerivationRecord {
    std::string J, theta, side;
    int twisted_dim = 0;
    int lck_dim = -1;  // -1: not recorded
};

struct AutomorphismRecord {
    std::string name;
    std::vector<std::string> matrix;
    std::vector<std::string> constraints;
    std::vector<Assignment> witnesses;
    std::string preserves;                    // J name, or empty
    std::optional<std::pair<std::string, std::string>> relates;  // M1 A = A M2
};

struct EquivalenceRecord {
    std::string id, J;
    std::string theta, omega;                      // generic structure
    std::vector<std::vector<std::string>> chain;  // applied in order
    Assignment witness;
    std::string expected_theta, expected_omega;
};

struct CenterRecord {
    Assignment witness;
    std::vector<std::vector<mpq_class>> basis;
    std::string note;
};

// Basis change from a constructed algebra onto this entry. The matrix acts on
// vectors (columns are images) and may use the listed construction parameters.
struct IdentificationRecord {
    std::string name, J, note;
    std::vector<std::string> params;
    std::vector<std::string> matrix;
    std::vector<std::pair<std::string, std::string>> J_params;  // entry parameter -> expression
};

struct CatalogEntry {
    std::string id, name, salamon, note;
    int dim = 0;
    std::vector<Parameter> params;
    std::vector<JRecord> J;
    std::vector<LcKFamily> lck;
    std::vector<NoLcKRecord> no_lck;
    std::vector<DerivationRecord> derivations;
    std::vector<AutomorphismRecord> automorphisms;
    std::vector<EquivalenceRecord> equivalences;
    std::vector<CenterRecord> center;
    std::vector<IdentificationRecord> identifications;

    const JRecord& find_J(const std::string& name) const;
};

struct Catalog {
    int version = 1;
    std::vector<CatalogEntry> entries;
    const CatalogEntry* find(const std::string& id) const;
    std::size_t complex_structures() const;
    std::size_t lck_families() const;
};

// SchemaError (with a path such as entries[3].lck[1].witnesses[0]) on bad input.
Catalog load_catalog(const std::string& text);
Catalog load_catalog_file(const std::string& path);
const std::string& builtin_catalog_text();
const Catalog& builtin_catalog();

Matrix parse_matrix(const std::vector<std::string>& m, int n, const Assignment& subs = {});
LieAlgebra build_algebra(const CatalogEntry& e, const Assignment& fixed = {});
ComplexStructure build_J(const CatalogEntry& e, const std::string& name, const Assignment& fixed = {});
LcKStructure build_lck(const CatalogEntry& e, const LcKFamily& f);

struct EntryReport {
    std::string entry;
    std::vector<Check> checks;
    std::size_t failures() const;
};

// Jacobi, integrability, center, every lcK row (identities, positivity, Lee
// round trip, Vaisman column), no-lcK certificates, derivation dimensions,
// automorphisms and equivalence chains.
EntryReport verify_entry(const CatalogEntry& e);
// Equivalence chains only, each evaluated at its radical-free witness.
EntryReport verify_equivalence(const CatalogEntry& e);

// Rows of the lcK classification table and the record each one maps to.
struct ManifestRow {
    std::string row;
    std::string entry;
    std::string record;
};
const std::vector<ManifestRow>& table_manifest();
// Empty when every row maps to exactly one record of the catalog.
std::vector<std::string> check_manifest(const Catalog& c);

// Flip the sign of the term-th coefficient of a stored Omega (for mutation tests).
std::size_t omega_term_count(const CatalogEntry& e, std::size_t family);
CatalogEntry flip_omega_sign(const CatalogEntry& e, std::size_t family, std::size_t term);

}  // namespace lckv

#endif
