#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace uinv {

enum class VarKind : std::uint8_t {
    Entry = 0,  // matrix entry x[a][b]
    Slice = 1,  // slice coordinate s[k][i]
    Param = 2,  // free parameter t, t1, t2, ... used for one-parameter subgroups
};

/// Largest board size a variable can be registered for.
inline constexpr int kMaxVarBoard = 250;

/// Index pair (k, i) with 1 <= k <= n and 0 <= i <= k-1. Names both the
/// generator J[k][i] and the slice coordinate s[k][i].
struct GenIndex {
    int k = 1;
    int i = 0;

    friend bool operator==(const GenIndex&, const GenIndex&) = default;
    friend auto operator<=>(const GenIndex&, const GenIndex&) = default;
};

/// Throws BadIndex unless 1 <= k <= n and 0 <= i <= k-1.
void check_index(GenIndex idx, int n);

/// Number of index pairs for board size n, n(n+1)/2.
constexpr int index_count(int n) { return n * (n + 1) / 2; }

/// Position of (k, i) in the (k, i)-lexicographic enumeration.
constexpr int lex_position(GenIndex idx) { return idx.k * (idx.k - 1) / 2 + idx.i; }

/// Position of s[k][i] in the slice ordering: all s[j][0] by j, then column
/// k = 2..n with i running k-1 down to 1.
constexpr int slice_rank(GenIndex idx, int n) {
    if (idx.i == 0) return idx.k - 1;
    return n + (idx.k - 1) * (idx.k - 2) / 2 + (idx.k - 1 - idx.i);
}

/// Inverse of slice_rank.
GenIndex slice_index_at_rank(int rank, int n);

/// A variable of the polynomial ring. Identity and order are both carried by
/// a packed code: kind, board size, then a rank within the kind. Entries rank
/// row-major; slice coordinates rank by slice_rank.
class VarId {
public:
    static VarId entry(int a, int b, int n);
    static VarId slice(int k, int i, int n);
    static VarId slice(GenIndex idx, int n) { return slice(idx.k, idx.i, n); }
    static VarId param(int index = 0);

    VarKind kind() const { return static_cast<VarKind>(code_ >> 24); }
    int board() const { return static_cast<int>((code_ >> 16) & 0xFF); }
    int rank() const { return static_cast<int>(code_ & 0xFFFF); }

    /// (a, b) for entries, (k, i) for slice coordinates, (index, 0) for params.
    std::pair<int, int> indices() const;

    /// x[a][b], s[k][i], t or t<index>.
    std::string name() const;

    /// Parses a rendered name; board size n attaches to x/s variables.
    static std::optional<VarId> parse(std::string_view text, int n);

    std::uint32_t code() const { return code_; }

    friend bool operator==(VarId, VarId) = default;
    friend auto operator<=>(VarId, VarId) = default;

private:
    explicit VarId(std::uint32_t code) : code_(code) {}
    std::uint32_t code_;
};

/// Matrix position (a, b), 1-based, of slice coordinate s[k][i]: a = i-k+n+1, b = k.
std::pair<int, int> slice_position(GenIndex idx, int n);

/// Slice coordinate at matrix position (a, b), or nullopt strictly above the
/// anti-diagonal.
std::optional<GenIndex> slice_coord_at(int a, int b, int n);

}  // namespace uinv

template <>
struct std::hash<uinv::VarId> {
    std::size_t operator()(uinv::VarId v) const noexcept { return std::hash<std::uint32_t>{}(v.code()); }
};
