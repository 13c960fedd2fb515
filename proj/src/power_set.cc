#include <iasl/error.hh>
#include <iasl/power_set.hh>

#include <algorithm>
#include <bit>

using namespace iasl;

using std::optional;
using std::string;
using std::string_view;
using std::uint32_t;
using std::vector;

GroundSet::GroundSet(IntSet base, int cap, int element_bound) :
    _base(base),
    _cap(cap)
{
    if (cap < 1 || cap > max_ground_cap)
        throw DomainError("ground set cap must lie in [1, " + std::to_string(max_ground_cap) + "]");
    if (! _base.contains(0))
        throw DomainError("ground set " + to_string(_base) + " must contain 0");
    if (_base.max() > element_bound)
        throw DomainError("ground set element " + std::to_string(_base.max()) + " exceeds bound " + std::to_string(element_bound));
    if (_base.size() > cap)
        throw InfeasibleError("ground set " + to_string(_base) + " has " + std::to_string(_base.size()) +
            " elements, enumeration cap is " + std::to_string(cap));
}

auto iasl::parse_ground_set(string_view text, int cap) -> GroundSet
{
    return GroundSet{parse_int_set(text), cap};
}

auto iasl::all_nonempty_subsets(const GroundSet & x) -> vector<IntSet>
{
    auto elements = x.base().elements();
    int n = x.size();
    vector<IntSet> result;
    result.reserve(x.subset_count());
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        IntSet s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                s.insert(elements[i]);
        result.push_back(s);
    }
    std::sort(result.begin(), result.end(), CanonicalLess{});
    return result;
}

PowerSet::PowerSet(const GroundSet & x) :
    _ground(x),
    _subsets(all_nonempty_subsets(x))
{
    auto elements = x.base().elements();
    int n = x.size();
    _rank_of_mask.assign(std::size_t{1} << n, -1);
    _mask_of_rank.resize(_subsets.size());
    for (int r = 0; r < count(); ++r) {
        uint32_t mask = 0;
        for (int i = 0; i < n; ++i)
            if (_subsets[r].contains(elements[i]))
                mask |= 1u << i;
        _mask_of_rank[r] = mask;
        _rank_of_mask[mask] = r;
    }

    _sum_rank.assign(_subsets.size() * _subsets.size(), -1);
    for (int i = 0; i < count(); ++i)
        for (int j = i; j < count(); ++j) {
            auto s = sumset(_subsets[i], _subsets[j]);
            int r = rank_of(s).value_or(-1);
            _sum_rank[i * count() + j] = r;
            _sum_rank[j * count() + i] = r;
        }
}

auto PowerSet::rank_of(const IntSet & s) const -> optional<int>
{
    if (s.empty() || ! _ground.contains(s))
        return std::nullopt;
    auto elements = _ground.base().elements();
    uint32_t mask = 0;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (s.contains(elements[i]))
            mask |= 1u << i;
    return _rank_of_mask[mask];
}

auto iasl::summand_decompositions(const IntSet & c, const GroundSet & x) -> vector<Decomposition>
{
    if (c.empty())
        throw DomainError("cannot decompose the empty set");
    if (! x.contains(c))
        throw DomainError(to_string(c) + " is not a subset of " + to_string(x.base()));

    PowerSet p{x};
    int target = *p.rank_of(c);
    vector<Decomposition> result;
    for (int i = 0; i < p.count(); ++i)
        for (int j = i; j < p.count(); ++j)
            if (p.sum_rank(i, j) == target)
                result.push_back(Decomposition{p.subset(i), p.subset(j)});
    return result;
}

auto SumsetClassification::of(const IntSet & s) const -> const SubsetClass &
{
    auto it = std::find_if(per_subset.begin(), per_subset.end(), [&] (const SubsetClass & c) { return c.subset == s; });
    if (it == per_subset.end())
        throw DomainError(to_string(s) + " is not a non-empty subset of " + to_string(ground.base()));
    return *it;
}

auto SumsetClassification::count_non_summands() const -> int
{
    return std::count_if(per_subset.begin(), per_subset.end(), [] (const SubsetClass & c) {
        return c.subset != IntSet{0} && ! c.is_nontrivial_summand;
    });
}

auto SumsetClassification::count_non_sumsets_or_non_summands() const -> int
{
    return std::count_if(per_subset.begin(), per_subset.end(), [] (const SubsetClass & c) {
        return c.subset != IntSet{0} && (! c.is_nontrivial_sumset || ! c.is_nontrivial_summand);
    });
}

auto iasl::classify(const GroundSet & x) -> SumsetClassification
{
    PowerSet p{x};
    SumsetClassification result{x, {}, 0, 0, 0, false};
    result.per_subset.reserve(p.count());
    for (const auto & s : p.subsets())
        result.per_subset.push_back(SubsetClass{s, false, false, std::nullopt});

    // rank 0 is {0}; every pair starting there is trivial
    for (int i = 1; i < p.count(); ++i)
        for (int j = i; j < p.count(); ++j) {
            int r = p.sum_rank(i, j);
            if (r < 0)
                continue;
            auto & target = result.per_subset[r];
            if (! target.is_nontrivial_sumset) {
                target.is_nontrivial_sumset = true;
                target.witness = Decomposition{p.subset(i), p.subset(j)};
            }
            result.per_subset[i].is_nontrivial_summand = true;
            result.per_subset[j].is_nontrivial_summand = true;
        }

    for (const auto & c : result.per_subset) {
        if (c.is_nontrivial_sumset)
            ++result.rho;
        if (c.subset != IntSet{0} && ! c.is_nontrivial_sumset && ! c.is_nontrivial_summand)
            ++result.rho_prime;
    }
    result.rho_double_prime = result.rho_prime;
    result.x_is_sumset = result.of(x.base()).is_nontrivial_sumset;
    return result;
}
