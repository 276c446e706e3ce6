#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace shellcheck {

inline constexpr int max_vertices = 64;

class capacity_error : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// A set of vertex ids in [0, 64), stored as a bitmask.
///
/// The empty face is a valid value with dimension -1.
class Face {
  public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}
    Face(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }

    static Face from_vertices(const std::vector<int>& vertices) {
        Face f;
        for (int v : vertices) f.insert(v);
        return f;
    }
    static constexpr Face single(int v) { return Face(std::uint64_t{1} << v); }
    /// {0, ..., n-1}
    static constexpr Face range(int n) {
        return Face(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr int dim() const { return size() - 1; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr bool subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }
    /// Largest vertex id, or -1 for the empty face.
    constexpr int max_vertex() const { return bits_ ? 63 - std::countl_zero(bits_) : -1; }
    constexpr int min_vertex() const { return bits_ ? std::countr_zero(bits_) : -1; }

    void insert(int v) {
        if (v < 0 || v >= max_vertices)
            throw capacity_error("vertex id " + std::to_string(v) + " outside [0, 64)");
        bits_ |= std::uint64_t{1} << v;
    }
    constexpr Face with(int v) const { return Face(bits_ | (std::uint64_t{1} << v)); }
    constexpr Face without(int v) const { return Face(bits_ & ~(std::uint64_t{1} << v)); }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    template <typename F>
    void for_each_vertex(F&& f) const {
        for (std::uint64_t b = bits_; b; b &= b - 1) f(std::countr_zero(b));
    }

    /// Calls f on every subset of this face, including the empty set and the face itself.
    template <typename F>
    void for_each_subset(F&& f) const {
        std::uint64_t s = bits_;
        while (true) {
            f(Face(s));
            if (s == 0) break;
            s = (s - 1) & bits_;
        }
    }

    friend constexpr Face operator|(Face a, Face b) { return Face(a.bits_ | b.bits_); }
    friend constexpr Face operator&(Face a, Face b) { return Face(a.bits_ & b.bits_); }
    friend constexpr Face operator-(Face a, Face b) { return Face(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(Face a, Face b) = default;

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each_vertex([&](int v) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }

  private:
    std::uint64_t bits_ = 0;
};

/// Facet order: by cardinality, then lexicographically on the sorted vertex list.
struct FaceOrder {
    constexpr bool operator()(Face a, Face b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        std::uint64_t d = a.bits() ^ b.bits();
        if (d == 0) return false;
        return (a.bits() & (d & (~d + 1))) != 0;
    }
};

} // namespace shellcheck

template <>
struct std::hash<shellcheck::Face> {
    std::size_t operator()(shellcheck::Face f) const noexcept {
        return std::hash<std::uint64_t>{}(f.bits());
    }
};
