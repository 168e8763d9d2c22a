#pragma once

#include <cstdint>
#include <vector>

#include "padicok/module_types.hpp"

namespace padicok {

// Element-level finite abelian p-group of type lambda_1 >= ... >= lambda_r.
// Elements are indices into the mixed-radix space prod p^{lambda_i}; the
// order is capped at 2^14 so enumeration stays bounded.
class FinAbGroup {
  public:
    FinAbGroup(std::uint64_t p, std::vector<int> lambda);

    std::uint64_t p() const { return p_; }
    const std::vector<int>& lambda() const { return lambda_; }
    int rank() const { return static_cast<int>(lambda_.size()); }
    std::uint32_t order() const { return order_; }
    ModuleType type() const { return ModuleType(lambda_); }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t scale(std::int64_t c, std::uint32_t a) const;
    std::uint32_t coord_order(int i) const { return widths_[static_cast<size_t>(i)]; }

    std::vector<std::uint32_t> coords(std::uint32_t a) const;
    std::uint32_t from_coords(const std::vector<std::uint32_t>& c) const;

    FinAbGroup product(const FinAbGroup& o) const;  // same p, concatenated coordinates

  private:
    std::uint64_t p_;
    std::vector<int> lambda_;
    std::vector<std::uint32_t> widths_;  // p^{lambda_i}
    std::uint32_t order_;
};

struct Subgroup {
    std::vector<std::int64_t> hnf;        // r x r canonical lattice basis, row-major
    std::vector<std::uint32_t> elements;  // sorted
    std::vector<int> type_lambda;         // descending

    std::uint32_t size() const { return static_cast<std::uint32_t>(elements.size()); }
};

// All subgroups, each once (deduplicated by the Hermite canonical form of the
// preimage lattice), found by closure BFS over single-generator extensions.
std::vector<Subgroup> enumerate_subgroups(const FinAbGroup& g);

// Type of the subgroup generated by `gens`, via element-order counting.
std::vector<int> subgroup_type(const FinAbGroup& g, const std::vector<std::uint32_t>& elements);

// |S_{G_1,...,G_m}(X_m)|: subgroups of prod G_i with surjective projections
// that are stable under p T_x.  groups[i] must be finite.
long long count_S(std::uint64_t p, const std::vector<ModuleType>& groups,
                  const std::vector<std::int64_t>& xs);

struct GroupStats {
    long long sur = 0;
    long long hom = 0;
    long long aut = 0;  // surjective endomorphism count when source and target agree
};

// Exhaustive map enumeration source -> target over generator images.
GroupStats brute_group_stats(const FinAbGroup& source, const FinAbGroup& target);

}  // namespace padicok
