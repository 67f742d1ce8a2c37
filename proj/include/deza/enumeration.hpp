#ifndef DEZA_ENUMERATION_HPP
#define DEZA_ENUMERATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deza/analysis.hpp"
#include "deza/canonical.hpp"
#include "deza/graph.hpp"

namespace deza {

inline constexpr int default_max_order = 12;
inline constexpr int hard_max_order = 16;

struct EnumerationOptions
{
    int workers = 1;
    /// Requests with n above this throw ResourceError. Capped at hard_max_order.
    int max_order = default_max_order;
    /// Search-tree node budget; 0 means unlimited. Exceeding it throws
    /// ResourceError rather than returning a truncated result.
    std::uint64_t node_limit = 0;
};

/// Reads DEZA_MAX_N from the environment, falling back to `fallback`.
int max_order_from_environment(int fallback = default_max_order);

struct RegularEnumeration
{
    std::vector<Graph> graphs; ///< canonically labeled, sorted by canonical form
    std::string note;          ///< set when the request is infeasible (nk odd, ...)
};

/// One representative per isomorphism class of connected k-regular graphs
/// on n vertices.
RegularEnumeration enumerate_regular(int n, int k, const EnumerationOptions& options = {});

/// Vertex-type census and characterization verdict of one corpus graph.
struct Theorem1Summary
{
    bool applicable = false; ///< strictly Deza with beta > 1
    bool holds = false;
    std::string reason; ///< failed condition and detail when it does not hold

    friend bool operator==(const Theorem1Summary&, const Theorem1Summary&) = default;
};

struct CensusRecord
{
    std::string graph6;
    DezaParameters params;
    int alpha = 0;
    int beta = 0;
    std::optional<TypeCensus> types; ///< present under k = b + 1, beta > 1
    Theorem1Summary theorem1;

    friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

/// Analyzes a Deza graph with b > a into a census record. The stored graph6
/// is the input's own labeling.
CensusRecord make_census_record(const Graph& g);

/// All strictly Deza graphs on n vertices up to isomorphism, canonically
/// labeled and sorted by (k, canonical form).
std::vector<Graph> enumerate_strictly_deza_graphs(int n, const EnumerationOptions& options = {});

/// enumerate_strictly_deza_graphs, each analyzed into a CensusRecord.
std::vector<CensusRecord> enumerate_strictly_deza(int n, const EnumerationOptions& options = {});

} // namespace deza

#endif // DEZA_ENUMERATION_HPP
