#pragma once

#include "dbr/poisson.hpp"

#include <optional>

namespace dbr {

// One term of a polynomial multivector in the file syntax: exact rational
// coefficient, exponent per coordinate, 1-based derivation indices.
struct MvTermData {
    std::string coeff;
    std::vector<int> monomial;
    std::vector<int> indices;
};

struct MtEntryData {
    int order = 0;
    std::optional<std::vector<std::pair<std::string, std::string>>> inner;
    std::optional<std::map<std::string, std::vector<std::pair<std::string, std::string>>>> map;
};

// Parsed instance file. Either the algebra sections or the poisson section
// is present; both is an input error.
struct InstanceData {
    bool has_algebra = false;
    std::vector<std::pair<std::string, int>> basis;
    struct BracketEntry {
        std::string x, y;
        std::vector<std::pair<std::string, std::string>> result;
    };
    std::vector<BracketEntry> brackets;
    std::vector<std::string> abelian;
    std::vector<std::pair<std::string, std::string>> p_element;
    std::optional<int> ehat_degree;
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> ehat_cols;
    std::vector<MtEntryData> mt;

    bool has_poisson = false;
    int dim = 0;
    int tangent = 0;
    int normal_trunc = 1;
    int tangential_trunc = 1;
    std::vector<MvTermData> bivector;
    std::vector<std::pair<int, std::vector<MvTermData>>> flow;
};

InstanceData parse_instance(const std::string& json_text);
InstanceData load_instance(const std::string& path);
std::string emit_instance(const InstanceData& data);

// A materialized instance: the V-algebra, the adapted derivation, and the
// time derivation of the gauge flow (empty when the file has no "mt"/flow).
struct Instance {
    VAlgebra V;
    DerivationSpec E;
    TimeDerivation mt;
    std::optional<PoissonModel> model;
    std::optional<PolyMv> pi;
};

Instance materialize(const InstanceData& data);

// Algebra-route instance data for a built V-algebra, for emission and
// round-tripping; P/ehat/mt are optional extras.
InstanceData algebra_instance(const VAlgebra& V, const DerivationSpec* E,
                              const TimeDerivation* mt);

} // namespace dbr
