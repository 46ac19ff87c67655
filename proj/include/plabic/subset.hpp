#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace plabic {

// A subset of [n] = {1..n}, always kept sorted ascending without repeats.
using Subset = std::vector<int>;

Subset make_subset(std::vector<int> elements);
Subset range_subset(int first, int last); // {first, ..., last}
Subset complement(const Subset& s, int n);
Subset set_union(const Subset& a, const Subset& b);
Subset set_difference(const Subset& a, const Subset& b);
Subset set_intersection(const Subset& a, const Subset& b);
bool contains(const Subset& s, int x);

// Colexicographic order: compare the largest elements first.
bool colex_less(const Subset& a, const Subset& b);

// All size-`size` subsets of [n] in colex order.
std::vector<Subset> subsets_of_size(int n, int size);

// "167" for n <= 9, "1,6,7" beyond; the empty set renders as "".
std::string label_string(const Subset& s, int n);
// Inverse of label_string. Digit strings are accepted only for n <= 9.
Subset parse_label(std::string_view text, int n);

std::size_t binomial(int n, int k);

} // namespace plabic
