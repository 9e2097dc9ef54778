#pragma once

#include "neumaier/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace neumaier {

/// Clique adjacency polynomial
///   C(x,y) = x(x+1)(v-y) - 2xy(k-y+1) + y(y-1)(lambda-y+2).
/// An s-clique of an edge-regular (v,k,lambda) graph is m-regular iff
/// C(m-1,s) = C(m,s) = 0.
std::int64_t cap_poly(const ErgParams& tau, std::int64_t x, std::int64_t y);

/// Largest root of (v-2k+l)y^2 + (k^2+3k-l-v(l+2))y + v(l+1-k), when it is an
/// integer >= 2. Exact integer arithmetic throughout.
std::optional<std::int64_t> solve_s(const ErgParams& tau);

/// Largest root of (v-s)x^2 - (v-s)x - s(s-1)(l-s+2), when it is a positive
/// integer.
std::optional<std::int64_t> solve_m(std::int64_t v, std::int64_t s, std::int64_t lambda);

/// Necessary conditions on an edge-regular triple: v > k > lambda,
/// v >= 2k - lambda, 2 | vk, 2 | k*lambda, 6 | vk*lambda.
bool satisfies_vklam(const ErgParams& tau);

enum class Rule { Erg1, Erg2, Erg3, Lam, Ksm };

std::string to_string(Rule rule);

/// Triangle-free strongly regular graphs known to exist with v <= 100.
const std::vector<SrgParams>& triangle_free_srg_catalog();

struct ExtremalRule {
    Rule rule;
    /// Complement witness (v, v-k-1, 0, v-2k+lambda) for Erg3.
    std::optional<SrgParams> witness;

    bool operator==(const ExtremalRule&) const = default;
};

/// Throws std::invalid_argument unless p satisfies the tuple invariants:
/// 0 < k < v-1, 0 <= lambda < k, 2 <= s <= lambda+2, m >= 1, the divisibility
/// conditions and the counting identities (v-s)m = (k-s+1)s and
/// (k-s+1)(m-1) = (lambda-s+2)(s-1).
void validate(const NeumaierParams& p);

/// k - lambda - s + m - 1; negative means no graph has these parameters,
/// zero forces a strongly regular graph.
std::int64_t ksm_slack(const NeumaierParams& p);

/// First rule proving the tuple (or its edge-regular triple) extremal or
/// empty. Rules are tried in the order Erg1, Erg3, Ksm with negative slack,
/// Erg2, Lam, Ksm with zero slack.
std::optional<ExtremalRule> classify_extremal(const NeumaierParams& p);

enum class Verdict { ErgEmptyOrExtremal, NgExtremal, NgEmpty, Open };

std::string to_string(Verdict verdict);

struct FeasibilityRecord {
    NeumaierParams params;
    Verdict verdict = Verdict::Open;
    std::optional<ExtremalRule> rule;
};

/// Every tuple (v,k,lambda;m,s) with 4 <= v <= max_v, 0 < k < v-1,
/// 0 <= lambda < k, 2 <= s <= lambda+2, m >= 1, the divisibility conditions
/// and C(m-1,s) = C(m,s) = 0, ordered lexicographically.
std::vector<FeasibilityRecord> enumerate_feasible(std::int64_t max_v);

/// Brute-force zero scan of cap_poly: all (m,s) with 2 <= s <= lambda+2,
/// 1 <= m <= s and C(m-1,s) = C(m,s) = 0.
std::vector<std::pair<std::int64_t, std::int64_t>> cap_zero_pairs(const ErgParams& tau);

/// Strongly regular parameters forced when k - lambda - s + m - 1 = 0.
/// Throws std::domain_error for m = s (the graph is complete) and
/// std::invalid_argument when m does not divide s(s-1) or m > s.
SrgParams ksm_equality_params(std::int64_t m, std::int64_t s);

/// Parameters forced when every neighbourhood is l disjoint (s-1)-cliques.
SrgParams genregvtx_params(std::int64_t l, std::int64_t m, std::int64_t s);

std::string result_label(const FeasibilityRecord& r);
std::string format_table(const std::vector<FeasibilityRecord>& records);
std::string to_json_line(const FeasibilityRecord& r);

} // namespace neumaier
