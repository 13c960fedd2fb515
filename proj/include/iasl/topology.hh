#ifndef IASL_GUARD_IASL_TOPOLOGY_HH
#define IASL_GUARD_IASL_TOPOLOGY_HH 1

#include <iasl/graph.hh>
#include <iasl/int_set.hh>
#include <iasl/labeling.hh>
#include <iasl/power_set.hh>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iasl
{
    inline constexpr int max_topology_ground_size = 4;

    struct TopologyCheck
    {
        bool ok = true;
        std::string reason;
        std::optional<std::pair<IntSet, IntSet>> witness;
    };

    /// Pairwise union/intersection closure plus ∅, X membership. Finite families need no
    /// more. Throws DomainError when a member is not a subset of X.
    auto is_topology(std::span<const IntSet> family, const GroundSet & x) -> TopologyCheck;

    class Topology
    {
    private:
        GroundSet _ground;
        std::vector<IntSet> _opens;

        Topology(GroundSet ground, std::vector<IntSet> opens);

    public:
        /// Throws DomainError if the family is not a topology on x. Duplicates are merged.
        static auto make(const GroundSet & x, std::vector<IntSet> family) -> Topology;

        auto ground() const -> const GroundSet & { return _ground; }

        /// Canonical order, so ∅ first.
        auto opens() const -> const std::vector<IntSet> & { return _opens; }
        auto size() const -> int { return static_cast<int>(_opens.size()); }
        auto contains(const IntSet & s) const -> bool;
        auto is_discrete() const -> bool { return size() == (1 << _ground.size()); }

        friend auto operator== (const Topology & a, const Topology & b) -> bool
        {
            return a._ground == b._ground && a._opens == b._opens;
        }
    };

    /**
     * Every topology on x, optionally only those containing {0}. Ordered by number of opens,
     * then lexicographically by canonical subset ranks. Throws InfeasibleError for |x| > 4.
     */
    auto enumerate_topologies(const GroundSet & x, bool require_zero_singleton) -> std::vector<Topology>;

    struct Realization
    {
        Graph graph;
        Labeling labeling;
    };

    /**
     * The star K_{1, r-2}: centre "c" labeled {0}, leaves "v1", "v2", ... labeled with the
     * remaining non-empty opens in canonical order. Throws NotRealizableError when {0} is not
     * open or the topology has only two opens.
     */
    auto realize_topology(const Topology & t) -> Realization;

    /// IASL whose vertex-label family plus ∅ is a topology on X.
    auto verify_top_iasl(const Graph & g, const Labeling & f) -> VerificationReport;

    /// Both verify_top_iasl and verify_iasgl.
    auto verify_top_iasgl(const Graph & g, const Labeling & f) -> VerificationReport;

    /// One subset literal per line, "∅" or "{}" for the empty set, optional "X {..}" header.
    /// Without a header the ground set is the union of the opens.
    auto parse_topology(std::string_view text) -> Topology;
    auto emit_topology(const Topology & t) -> std::string;
}

#endif
