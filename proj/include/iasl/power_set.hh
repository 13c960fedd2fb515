#ifndef IASL_GUARD_IASL_POWER_SET_HH
#define IASL_GUARD_IASL_POWER_SET_HH 1

#include <iasl/int_set.hh>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace iasl
{
    inline constexpr int default_ground_cap = 5;

    /// Hard ceiling on the configurable cap: families of subsets are held in 64-bit masks.
    inline constexpr int max_ground_cap = 6;

    /**
     * The ground set X whose non-empty subsets are the available labels. Always contains 0.
     */
    class GroundSet
    {
    private:
        IntSet _base;
        int _cap;

    public:
        /// The trivial ground set {0}.
        GroundSet() : _base(IntSet{0}), _cap(default_ground_cap) {}

        /// Throws DomainError if 0 is missing or an element exceeds element_bound, and
        /// InfeasibleError if |X| exceeds cap.
        explicit GroundSet(IntSet base, int cap = default_ground_cap, int element_bound = default_element_bound);

        auto base() const -> const IntSet & { return _base; }
        auto size() const -> int { return _base.size(); }
        auto max_element() const -> int { return _base.max(); }
        auto cap() const -> int { return _cap; }

        /// Number of non-empty subsets, 2^|X| - 1.
        auto subset_count() const -> int { return (1 << size()) - 1; }

        auto contains(const IntSet & s) const -> bool { return s.is_subset_of(_base); }

        friend auto operator== (const GroundSet & a, const GroundSet & b) -> bool { return a._base == b._base; }
    };

    auto parse_ground_set(std::string_view text, int cap = default_ground_cap) -> GroundSet;

    /// Non-empty subsets of X in canonical order. Never contains the empty set.
    auto all_nonempty_subsets(const GroundSet & x) -> std::vector<IntSet>;

    /**
     * Rank-indexed view of P(X) - {∅} with a precomputed sumset table. Rank follows
     * all_nonempty_subsets, so rank 0 is always {0}.
     */
    class PowerSet
    {
    private:
        GroundSet _ground;
        std::vector<IntSet> _subsets;
        std::vector<int> _rank_of_mask;
        std::vector<std::uint32_t> _mask_of_rank;
        std::vector<int> _sum_rank;

    public:
        explicit PowerSet(const GroundSet & x);

        auto ground() const -> const GroundSet & { return _ground; }
        auto count() const -> int { return static_cast<int>(_subsets.size()); }
        auto subset(int rank) const -> const IntSet & { return _subsets[rank]; }
        auto subsets() const -> const std::vector<IntSet> & { return _subsets; }

        /// Rank of a non-empty subset of X, nullopt for anything else.
        auto rank_of(const IntSet & s) const -> std::optional<int>;

        /// Bit i set when the i-th smallest element of X is present.
        auto position_mask(int rank) const -> std::uint32_t { return _mask_of_rank[rank]; }
        auto rank_of_mask(std::uint32_t mask) const -> int { return _rank_of_mask[mask]; }

        /// Rank of subset(i) + subset(j), or -1 when that sumset is not inside X.
        auto sum_rank(int i, int j) const -> int { return _sum_rank[i * count() + j]; }
    };

    struct Decomposition
    {
        IntSet first;
        IntSet second;
    };

    /// Unordered pairs (A, B) of non-empty subsets of X with A + B = c, trivial ones included.
    /// Pairs come with rank(A) <= rank(B), ordered by rank(A). Throws DomainError unless c is a
    /// non-empty subset of X.
    auto summand_decompositions(const IntSet & c, const GroundSet & x) -> std::vector<Decomposition>;

    struct SubsetClass
    {
        IntSet subset;
        bool is_nontrivial_sumset = false;
        bool is_nontrivial_summand = false;
        std::optional<Decomposition> witness;
    };

    /**
     * Sumset/summand flags for every non-empty subset of X. A decomposition A + B is
     * non-trivial when neither side is {0}; A = B is allowed here. The counts:
     *
     *   rho              subsets that are non-trivial sumsets,
     *   rho_prime        subsets other than {0} that are neither non-trivial sumsets nor
     *                    non-trivial summands,
     *   rho_double_prime the same count under the degree condition's phrasing (identical
     *                    definition, exposed separately).
     */
    struct SumsetClassification
    {
        GroundSet ground;
        std::vector<SubsetClass> per_subset;
        int rho = 0;
        int rho_prime = 0;
        int rho_double_prime = 0;
        bool x_is_sumset = false;

        auto of(const IntSet & s) const -> const SubsetClass &;

        /// Subsets other than {0} that are not non-trivial summands.
        auto count_non_summands() const -> int;

        /// Subsets other than {0} that are not non-trivial sumsets or not non-trivial summands.
        auto count_non_sumsets_or_non_summands() const -> int;
    };

    auto classify(const GroundSet & x) -> SumsetClassification;
}

#endif
