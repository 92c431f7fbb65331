#pragma once

#include "dgahom/cdga.hpp"
#include "dgahom/homotopy.hpp"
#include "dgahom/map.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dgahom {

/// One elementary extension: the generators of a single degree adjoined at
/// this step, with differentials in the earlier part of the algebra.
struct ExtensionStage {
    unsigned degree = 0;
    std::vector<unsigned> gen_indices;
};

struct NamedModel {
    std::string id;
    std::shared_ptr<FreeCDGA> algebra;
    std::vector<ExtensionStage> extension_order;
    std::string provenance;
};

// ---------------------------------------------------------------------------
// Model file format: line oriented,
//   gen <name> <degree> [weight]
//   d <name> = <polynomial>
// with '*' products, '^' powers, rational coefficients p/q, '#' comments.

Element parse_polynomial(const FreeCDGA& a, const std::string& text);

/// Interval polynomial: the same syntax plus the reserved symbols t and dt,
/// e.g. "2*x*t^2 + 1/2*x*dt".
IntervalElement parse_interval_polynomial(const FreeCDGA& a, const std::string& text);

/// Map literal "gen = poly; gen = poly; ..." with every source generator
/// assigned; polynomials live in the target algebra.
DGAMap parse_map(const FreeCDGA& source, const FreeCDGA& target, const std::string& text);
Homotopy parse_homotopy(const FreeCDGA& source, const FreeCDGA& target,
                        const std::string& text);

std::string write_map(const DGAMap& f);
std::string write_homotopy(const Homotopy& h);

std::shared_ptr<FreeCDGA> parse_model(const std::string& text, unsigned truncation,
                                      const std::string& label = {},
                                      bool minimal_flag = false);
std::string write_model(const FreeCDGA& a);

NamedModel load_model(const std::string& text, unsigned truncation, const std::string& id);

/// Derive the elementary-extension order from the generator order: maximal
/// runs of equal degree whose differentials live strictly before the run.
std::vector<ExtensionStage> extension_order(const FreeCDGA& a);

// ---------------------------------------------------------------------------
// Built-ins.

std::vector<std::string> builtin_model_ids();
const NamedModel& builtin_model(const std::string& id);
bool is_builtin_model(const std::string& id);

/// Domain/codomain pair for a mapping set [X, Y]; maps go M_Y -> M_X.
struct ModelPair {
    std::string id;
    std::string domain;    // X
    std::string codomain;  // Y
};

const std::vector<ModelPair>& builtin_pairs();
const ModelPair& builtin_pair(const std::string& id);

/// Invariant schema of a mapping set: named integer invariants plus the
/// modulus identifying the torsion invariant as a function of the degrees.
struct MappingClassSchema {
    enum class Kind { ProductTimesSphere, ConnectedSumTwo, HopfPair };
    std::string id;
    Kind kind = Kind::ProductTimesSphere;
    std::vector<std::string> invariant_names;

    /// Modulus of the final (Hopf) invariant given the degree invariants;
    /// 0 means no identification.
    Int modulus(const std::vector<Int>& degrees) const;
};

const MappingClassSchema& builtin_schema(const std::string& id);
std::vector<std::string> builtin_schema_ids();

/// Extract the invariant tuple of a valid map for a built-in pair.
std::vector<Rat> classify_map(const ModelPair& pair, const DGAMap& phi);

}  // namespace dgahom
