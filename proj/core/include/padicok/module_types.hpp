#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padicok/padic_linalg.hpp"
#include "padicok/smith.hpp"

namespace padicok {

// Isomorphism class of a finitely generated Z_p-module: multiplicities of the
// elementary-divisor exponents plus a free rank.
struct ModuleType {
    std::map<int, int> finite;  // exponent r >= 1 -> count d_r (entries positive)
    int free_count = 0;

    ModuleType() = default;
    explicit ModuleType(const std::vector<int>& parts);  // kInf entries = free

    static ModuleType parse(const std::string& text);    // "1,1,3,inf"; "" or "0" = trivial
    std::string str() const;

    bool trivial() const { return finite.empty() && free_count == 0; }
    bool is_finite() const { return free_count == 0; }
    int s_rank() const;
    int d(int r) const;                 // multiplicity of finite exponent r
    int max_finite_exp() const;         // 0 when no finite part
    std::vector<int> parts() const;     // ascending, frees (kInf) last

    CokType truncate(int k) const;      // exponents capped at k+, no zero entries

    ModuleType shifted_down() const;            // pH: r -> r-1, drop r = 1
    ModuleType shifted_up(int new_ones) const;  // section of shifted_down

    ModuleType operator+(const ModuleType& o) const;  // direct product
    bool operator==(const ModuleType&) const = default;
    auto operator<=>(const ModuleType&) const = default;
};

// Tuple problem instance: shifts and target modules, with optional ambient n.
struct TupleSpec {
    std::uint64_t p = 2;
    std::vector<std::int64_t> xs;
    std::vector<ModuleType> targets;
    std::optional<int> n;

    int m() const { return static_cast<int>(targets.size()); }
    XSet xset(int K) const { return XSet(Modulus(p, K), xs); }
    void validate() const;  // throws std::invalid_argument on broken invariants

    // Line format "p=...", "x=...", "H1=...", ..., optional "n=...".
    static TupleSpec load(std::istream& in);
    static TupleSpec load_file(const std::string& path);
    std::string save() const;
};

// m x n grid over {0, ..., k-1, k+}; the value k encodes k+.
struct Presentation {
    int k = 1;
    std::vector<std::vector<int>> grid;

    int m() const { return static_cast<int>(grid.size()); }
    int n() const { return grid.empty() ? 0 : static_cast<int>(grid[0].size()); }

    // Canonical k-presentation: each row ascending.
    static Presentation of(const std::vector<ModuleType>& targets, int n, int k);

    Presentation concat(const Presentation& o) const;  // column concatenation
    Presentation row_sorted() const;
    bool same_rows(const Presentation& o) const;       // equal up to per-row reordering
    bool operator==(const Presentation&) const = default;
};

}  // namespace padicok
