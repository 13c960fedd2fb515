#ifndef IASL_GUARD_IASL_INT_SET_HH
#define IASL_GUARD_IASL_INT_SET_HH 1

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace iasl
{
    /// Elements are stored in a 128-bit word, so anything in [0, 127] is representable.
    inline constexpr int storage_bits = 128;

    /// Largest element accepted in a label or ground set unless configured otherwise. Any
    /// sumset of two such sets still fits the storage word.
    inline constexpr int default_element_bound = 63;

    /**
     * A finite set of non-negative integers, held as a bit vector indexed by element value.
     *
     * The empty set is a valid value (topologies need it) but is never a valid vertex or
     * edge label; that is enforced by the verifiers, not here.
     */
    class IntSet
    {
    public:
        using Word = unsigned __int128;

    private:
        Word _bits = 0;

    public:
        IntSet() = default;
        IntSet(std::initializer_list<int> elements);
        explicit IntSet(const std::vector<int> & elements);

        static auto from_bits(Word bits) -> IntSet;

        auto bits() const -> Word { return _bits; }
        auto empty() const -> bool { return _bits == 0; }
        auto size() const -> int;
        auto contains(int element) const -> bool;
        auto insert(int element) -> void;

        /// Smallest / largest element. Throws DomainError on the empty set.
        auto min() const -> int;
        auto max() const -> int;

        auto elements() const -> std::vector<int>;
        auto is_subset_of(const IntSet & other) const -> bool { return (_bits & ~other._bits) == 0; }

        friend auto operator| (const IntSet & a, const IntSet & b) -> IntSet { return from_bits(a._bits | b._bits); }
        friend auto operator& (const IntSet & a, const IntSet & b) -> IntSet { return from_bits(a._bits & b._bits); }
        friend auto operator== (const IntSet & a, const IntSet & b) -> bool { return a._bits == b._bits; }
    };

    /// Canonical order: ascending cardinality, then lexicographic on the sorted elements.
    auto canonical_less(const IntSet & a, const IntSet & b) -> bool;

    struct CanonicalLess
    {
        auto operator() (const IntSet & a, const IntSet & b) const -> bool { return canonical_less(a, b); }
    };

    struct IntSetHash
    {
        auto operator() (const IntSet & s) const -> std::size_t;
    };

    /// { a + b : a in A, b in B }. Both operands must be non-empty.
    auto sumset(const IntSet & a, const IntSet & b) -> IntSet;

    /// Parses "{0,1,3}", "0,1,3", "{}" or "∅". Elements above element_bound are rejected.
    auto parse_int_set(std::string_view text, int element_bound = default_element_bound) -> IntSet;

    /// Always braced and sorted, "{}" for the empty set.
    auto to_string(const IntSet & s) -> std::string;
}

#endif
