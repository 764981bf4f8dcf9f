#include "uinv/var.hpp"

#include "uinv/errors.hpp"

#include <cctype>
#include <charconv>

namespace uinv {

namespace {

std::uint32_t pack(VarKind kind, int n, int rank) {
    return (static_cast<std::uint32_t>(kind) << 24) | (static_cast<std::uint32_t>(n) << 16) |
           static_cast<std::uint32_t>(rank);
}

void check_board(int n) {
    if (n < 1 || n > kMaxVarBoard) {
        throw BadIndex("board size " + std::to_string(n) + " out of range");
    }
}

// Reads "[<int>]" at the front of text.
std::optional<int> take_bracketed(std::string_view& text) {
    if (text.empty() || text.front() != '[') return std::nullopt;
    const auto close = text.find(']');
    if (close == std::string_view::npos) return std::nullopt;
    int value = 0;
    const auto body = text.substr(1, close - 1);
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc() || ptr != body.data() + body.size()) return std::nullopt;
    text.remove_prefix(close + 1);
    return value;
}

}  // namespace

void check_index(GenIndex idx, int n) {
    if (n < 1 || idx.k < 1 || idx.k > n || idx.i < 0 || idx.i > idx.k - 1) {
        throw BadIndex("index (" + std::to_string(idx.k) + "," + std::to_string(idx.i) +
                       ") invalid for n=" + std::to_string(n));
    }
}

GenIndex slice_index_at_rank(int rank, int n) {
    if (rank < 0 || rank >= index_count(n)) throw BadIndex("slice rank out of range");
    if (rank < n) return {rank + 1, 0};
    int r = rank - n;
    for (int k = 2; k <= n; ++k) {
        if (r < k - 1) return {k, k - 1 - r};
        r -= k - 1;
    }
    throw BadIndex("slice rank out of range");
}

VarId VarId::entry(int a, int b, int n) {
    check_board(n);
    if (a < 1 || a > n || b < 1 || b > n) {
        throw BadIndex("entry x[" + std::to_string(a) + "][" + std::to_string(b) + "] outside n=" +
                       std::to_string(n));
    }
    return VarId(pack(VarKind::Entry, n, (a - 1) * n + (b - 1)));
}

VarId VarId::slice(int k, int i, int n) {
    check_board(n);
    check_index({k, i}, n);
    return VarId(pack(VarKind::Slice, n, slice_rank({k, i}, n)));
}

VarId VarId::param(int index) {
    if (index < 0 || index > 0xFFFF) throw BadIndex("parameter index out of range");
    return VarId(pack(VarKind::Param, 0, index));
}

std::pair<int, int> VarId::indices() const {
    const int n = board();
    switch (kind()) {
        case VarKind::Entry: return {rank() / n + 1, rank() % n + 1};
        case VarKind::Slice: {
            const auto idx = slice_index_at_rank(rank(), n);
            return {idx.k, idx.i};
        }
        case VarKind::Param: break;
    }
    return {rank(), 0};
}

std::string VarId::name() const {
    const auto [p, q] = indices();
    switch (kind()) {
        case VarKind::Entry: return "x[" + std::to_string(p) + "][" + std::to_string(q) + "]";
        case VarKind::Slice: return "s[" + std::to_string(p) + "][" + std::to_string(q) + "]";
        case VarKind::Param: break;
    }
    return p == 0 ? "t" : "t" + std::to_string(p);
}

std::optional<VarId> VarId::parse(std::string_view text, int n) {
    if (text.empty()) return std::nullopt;
    const char head = text.front();
    text.remove_prefix(1);
    if (head == 't') {
        if (text.empty()) return param(0);
        int index = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), index);
        if (ec != std::errc() || ptr != text.data() + text.size() || index < 1) return std::nullopt;
        return param(index);
    }
    if (head != 'x' && head != 's') return std::nullopt;
    const auto p = take_bracketed(text);
    const auto q = take_bracketed(text);
    if (!p || !q || !text.empty()) return std::nullopt;
    try {
        return head == 'x' ? entry(*p, *q, n) : slice(*p, *q, n);
    } catch (const BadIndex&) {
        return std::nullopt;
    }
}

std::pair<int, int> slice_position(GenIndex idx, int n) {
    check_index(idx, n);
    return {idx.i - idx.k + n + 1, idx.k};
}

std::optional<GenIndex> slice_coord_at(int a, int b, int n) {
    if (a < 1 || a > n || b < 1 || b > n) throw BadIndex("matrix position out of range");
    const int i = a + b - n - 1;
    if (i < 0) return std::nullopt;
    return GenIndex{b, i};
}

}  // namespace uinv
