#include "plabic/subset.hpp"

#include "plabic/error.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

namespace plabic {

Subset make_subset(std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw ParameterError("subset has repeated elements");
    return elements;
}

Subset range_subset(int first, int last) {
    Subset s;
    for (int i = first; i <= last; ++i)
        s.push_back(i);
    return s;
}

Subset complement(const Subset& s, int n) {
    Subset out;
    for (int i = 1; i <= n; ++i)
        if (!contains(s, i))
            out.push_back(i);
    return out;
}

Subset set_union(const Subset& a, const Subset& b) {
    Subset out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Subset set_difference(const Subset& a, const Subset& b) {
    Subset out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Subset set_intersection(const Subset& a, const Subset& b) {
    Subset out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains(const Subset& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

bool colex_less(const Subset& a, const Subset& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

std::vector<Subset> subsets_of_size(int n, int size) {
    std::vector<Subset> out;
    if (size < 0 || size > n)
        return out;
    Subset cur = range_subset(1, size);
    while (true) {
        out.push_back(cur);
        // colex successor: bump the first element that can move up
        int i = 0;
        while (i < size && cur[i] + 1 == (i + 1 < size ? cur[i + 1] : n + 1))
            ++i;
        if (i == size)
            break;
        ++cur[i];
        for (int j = 0; j < i; ++j)
            cur[j] = j + 1;
    }
    return out;
}

std::string label_string(const Subset& s, int n) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (n > 9 && i > 0)
            out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

Subset parse_label(std::string_view text, int n) {
    std::vector<int> elems;
    if (text.find(',') != std::string_view::npos || n > 9) {
        std::size_t pos = 0;
        while (pos <= text.size() && !text.empty()) {
            auto next = text.find(',', pos);
            auto tok = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
            if (tok.empty())
                throw FormatError("empty element in label '" + std::string(text) + "'");
            int v = 0;
            for (char c : tok) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw FormatError("bad label '" + std::string(text) + "'");
                v = v * 10 + (c - '0');
            }
            elems.push_back(v);
            if (next == std::string_view::npos)
                break;
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                throw FormatError("bad label '" + std::string(text) + "'");
            elems.push_back(c - '0');
        }
    }
    for (int v : elems)
        if (v < 1 || v > n)
            throw FormatError("label element out of range in '" + std::string(text) + "'");
    return make_subset(std::move(elems));
}

std::size_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

} // namespace plabic
