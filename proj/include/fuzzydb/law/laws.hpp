#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fuzzydb/law/generator.hpp"

namespace fuzzydb::law {

enum class LawExpectation { Holds, FailsWithWitness };

struct LawReport {
    std::string law_id;
    LawExpectation expected = LawExpectation::Holds;
    bool as_expected = false;
    int instances = 0;
    std::uint64_t seed = 0;
    /// Inclusion laws: how many instances were strictly included. The law
    /// only counts as expected when at least one strict instance appears,
    /// since equality must not be asserted.
    int strict_count = -1;
    /// Counterexample laws: how often the (false) identity also failed on
    /// random instances. Informational.
    int random_violations = -1;
    std::string witness;
};

struct LawCase {
    std::string id;
    int arity = 1;
    LawExpectation expected = LawExpectation::Holds;
    std::function<void(InstanceGenerator&, int, LawReport&)> run;
};

/// One case per result of the algebra: the unary-operator identities, the
/// standard-union laws, commutativity/associativity/distributivity of the
/// fuzzy set operations, the difference results, projection preservation
/// and its counterexamples, and padding preservation.
const std::vector<LawCase>& law_registry();

std::vector<std::string> law_ids();

/// Runs one law; each law draws from its own seed stream derived from the
/// base seed, so laws can run independently and in any order.
LawReport check_law(const LawCase& law, std::uint64_t seed, int n);
LawReport check_law(const std::string& law_id, std::uint64_t seed, int n);

std::vector<LawReport> check_all_laws(std::uint64_t seed, int n);

/// "LAW <id> PASS|FAIL seed=<s> n=<n>" plus annotations.
std::string report_line(const LawReport& rep);

struct CoherenceReport {
    int instances = 0;
    int failures = 0;
    std::string first_failure;
};

/// Cross-checks the native key-map implementations of the standard union,
/// regularization, renaming, padding and the theta-join skeleton against
/// the identity-array formula constructions.
CoherenceReport check_formula_coherence(std::uint64_t seed, int n);

}  // namespace fuzzydb::law
