#include <iasl/error.hh>
#include <iasl/int_set.hh>

#include <bit>
#include <charconv>
#include <cstdint>

using namespace iasl;

using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace
{
    auto low_word(IntSet::Word w) -> uint64_t { return static_cast<uint64_t>(w); }
    auto high_word(IntSet::Word w) -> uint64_t { return static_cast<uint64_t>(w >> 64); }

    auto lowest_bit(IntSet::Word w) -> int
    {
        if (low_word(w) != 0)
            return std::countr_zero(low_word(w));
        return 64 + std::countr_zero(high_word(w));
    }

    auto highest_bit(IntSet::Word w) -> int
    {
        if (high_word(w) != 0)
            return 127 - std::countl_zero(high_word(w));
        return 63 - std::countl_zero(low_word(w));
    }

    auto check_element(int element) -> void
    {
        if (element < 0 || element >= storage_bits)
            throw DomainError("element " + std::to_string(element) + " outside [0, " + std::to_string(storage_bits - 1) + "]");
    }

    auto trim(string_view s) -> string_view
    {
        while (! s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
            s.remove_prefix(1);
        while (! s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
            s.remove_suffix(1);
        return s;
    }
}

IntSet::IntSet(std::initializer_list<int> elements)
{
    for (int e : elements)
        insert(e);
}

IntSet::IntSet(const vector<int> & elements)
{
    for (int e : elements)
        insert(e);
}

auto IntSet::from_bits(Word bits) -> IntSet
{
    IntSet result;
    result._bits = bits;
    return result;
}

auto IntSet::size() const -> int
{
    return std::popcount(low_word(_bits)) + std::popcount(high_word(_bits));
}

auto IntSet::contains(int element) const -> bool
{
    if (element < 0 || element >= storage_bits)
        return false;
    return (_bits >> element) & 1;
}

auto IntSet::insert(int element) -> void
{
    check_element(element);
    _bits |= Word{1} << element;
}

auto IntSet::min() const -> int
{
    if (empty())
        throw DomainError("min of the empty set");
    return lowest_bit(_bits);
}

auto IntSet::max() const -> int
{
    if (empty())
        throw DomainError("max of the empty set");
    return highest_bit(_bits);
}

auto IntSet::elements() const -> vector<int>
{
    vector<int> result;
    result.reserve(size());
    for (Word w = _bits; w != 0; w &= w - 1)
        result.push_back(lowest_bit(w));
    return result;
}

auto iasl::canonical_less(const IntSet & a, const IntSet & b) -> bool
{
    int sa = a.size(), sb = b.size();
    if (sa != sb)
        return sa < sb;
    if (a == b)
        return false;
    // equal sizes: the sorted sequences share every element below the smallest difference,
    // so whichever set holds that element comes first
    int d = lowest_bit(a.bits() ^ b.bits());
    return a.contains(d);
}

auto IntSetHash::operator() (const IntSet & s) const -> std::size_t
{
    auto lo = low_word(s.bits()), hi = high_word(s.bits());
    return std::hash<uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
}

auto iasl::sumset(const IntSet & a, const IntSet & b) -> IntSet
{
    if (a.empty() || b.empty())
        throw DomainError("sumset of an empty set: no vertex may carry the empty set as its label");
    if (a.max() + b.max() >= storage_bits)
        throw DomainError("sumset exceeds representable element range");

    // shifted-OR: one word operation per element of the smaller operand
    const IntSet & small = a.size() <= b.size() ? a : b;
    const IntSet & large = a.size() <= b.size() ? b : a;
    IntSet::Word result = 0;
    for (IntSet::Word w = small.bits(); w != 0; w &= w - 1)
        result |= large.bits() << lowest_bit(w);
    return IntSet::from_bits(result);
}

auto iasl::parse_int_set(string_view text, int element_bound) -> IntSet
{
    auto body = trim(text);
    if (body == "∅")
        return IntSet{};

    if (! body.empty() && body.front() == '{') {
        if (body.back() != '}')
            throw ParseError("unterminated set literal '" + string(text) + "'");
        body = trim(body.substr(1, body.size() - 2));
    }
    else if (! body.empty() && body.back() == '}')
        throw ParseError("unbalanced set literal '" + string(text) + "'");

    IntSet result;
    if (body.empty())
        return result;

    while (true) {
        auto comma = body.find(',');
        auto item = trim(body.substr(0, comma));
        if (item.empty())
            throw ParseError("empty element in set literal '" + string(text) + "'");

        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size())
            throw ParseError("bad element '" + string(item) + "' in set literal");
        if (value < 0)
            throw ParseError("negative element " + string(item) + " in set literal");
        if (value > element_bound)
            throw ParseError("element " + string(item) + " exceeds bound " + std::to_string(element_bound));
        if (result.contains(value))
            throw ParseError("duplicate element " + string(item) + " in set literal");
        result.insert(value);

        if (comma == string_view::npos)
            break;
        body = body.substr(comma + 1);
    }
    return result;
}

auto iasl::to_string(const IntSet & s) -> string
{
    string result = "{";
    bool first = true;
    for (int e : s.elements()) {
        if (! first)
            result += ',';
        result += std::to_string(e);
        first = false;
    }
    result += '}';
    return result;
}
