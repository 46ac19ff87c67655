#pragma once

#include "plabic/polyhedra.hpp"
#include "plabic/subset.hpp"

#include <string>
#include <utility>
#include <vector>

namespace plabic {

// Finite poset given by its cover relations; leq is the reflexive-transitive
// closure.
class Poset {
public:
    Poset(std::vector<std::string> names, std::vector<std::pair<int, int>> covers);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    // (lower, upper) pairs, lower covered by upper
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    bool leq(int a, int b) const { return leq_[a][b]; }
    bool comparable(int a, int b) const { return leq_[a][b] || leq_[b][a]; }
    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

private:
    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<char>> leq_;
};

// P_{k,n}: elements p_{i,j}, 1 <= i <= k < j <= n, with
// p_{i,j} <= p_{i',j'} iff i >= i' and j >= j'.
struct GridPoset {
    int k = 0;
    int n = 0;
    Poset poset;

    int index(int i, int j) const { return (i - 1) * (n - k) + (j - k - 1); }
    std::pair<int, int> element(int idx) const { return {idx / (n - k) + 1, idx % (n - k) + k + 1}; }
};

GridPoset grid_poset(int k, int n);

using Antichain = std::vector<int>; // sorted element indices

// Every antichain, the empty one first; each is sorted.
std::vector<Antichain> antichains(const Poset& p);
// Every maximal chain, listed bottom to top.
std::vector<std::vector<int>> maximal_chains(const Poset& p);

// Order-preserving maps P -> [0, r], cover inequalities only.
HRep order_polytope_H(const Poset& p, int r);
// x >= 0 with every maximal chain summing to at most r.
HRep chain_polytope_H(const Poset& p, int r);

IntVector chi(const Poset& p, const Antichain& a);

// Removed sources i_1 < ... < i_r = [k] \ J paired with added sinks
// j_1 > ... > j_r = J \ [k], giving {p_{i_l, j_l}}.
Antichain j_to_antichain(const GridPoset& g, const Subset& J);
Subset antichain_to_j(const GridPoset& g, const Antichain& a);

std::string antichain_name(const Poset& p, const Antichain& a);

} // namespace plabic
