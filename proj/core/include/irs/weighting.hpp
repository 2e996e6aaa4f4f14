#pragma once
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "irs/graph.hpp"

namespace irs {

// Edge weights indexed like Graph::edges(); k is the declared maximum.
struct EdgeWeighting {
  long long k = 0;
  std::vector<long long> w;
};

// Sum of incident edge weights per vertex.
std::vector<long long> weighted_degrees(const Graph& g, const EdgeWeighting& f);

struct VerificationResult {
  bool valid = false;
  std::string detail;  // first offending pair / weight, empty when valid
};

// Valid iff every weight is in [1, k] and all weighted degrees are
// pairwise distinct.
VerificationResult verify_irregular(const Graph& g, const EdgeWeighting& f);

struct LowerBound {
  bool finite = true;  // false: no finite strength exists
  long long value = 1; // degree-class counting bound (sound)
  // For d-regular inputs (d >= 1): ceil((n+d+1)/d), reported verbatim.
  std::optional<long long> regular_formula;
};

LowerBound lower_bound(const Graph& g);

// Serialization: first line "k=<int>", then "u v w" with u < v, ascending.
void write_weighting(const Graph& g, const EdgeWeighting& f, std::ostream& out);
EdgeWeighting read_weighting(const Graph& g, std::istream& in);

}  // namespace irs
