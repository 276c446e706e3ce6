#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace shellcheck {

/// Exact cover by dancing links. Every item must be covered exactly once.
/// The search always branches on the item with the fewest remaining rows,
/// lowest index first, so the solution returned is deterministic.
class ExactCover {
  public:
    explicit ExactCover(std::size_t n_items) : n_items_(n_items) {
        nodes_.resize(n_items + 1);
        for (std::size_t i = 0; i <= n_items; ++i) {
            nodes_[i].left = i == 0 ? n_items : i - 1;
            nodes_[i].right = i == n_items ? 0 : i + 1;
            nodes_[i].up = nodes_[i].down = i;
            nodes_[i].column = i;
        }
        sizes_.assign(n_items + 1, 0);
    }

    /// Adds a row covering the given item indices; returns the row index.
    std::size_t add_row(const std::vector<std::size_t>& items) {
        if (items.empty()) throw std::invalid_argument("exact cover row must be nonempty");
        const std::size_t row = n_rows_++;
        std::size_t first = nodes_.size();
        for (std::size_t k = 0; k < items.size(); ++k) {
            std::size_t col = items[k] + 1;
            if (items[k] >= n_items_) throw std::out_of_range("exact cover item out of range");
            Node n;
            n.column = col;
            n.row = row;
            n.up = nodes_[col].up;
            n.down = col;
            n.left = k == 0 ? nodes_.size() : nodes_.size() - 1;
            n.right = first;
            std::size_t id = nodes_.size();
            nodes_.push_back(n);
            nodes_[nodes_[col].up].down = id;
            nodes_[col].up = id;
            if (k > 0) nodes_[id - 1].right = id;
            nodes_[first].left = id;
            ++sizes_[col];
        }
        return row;
    }

    /// Returns the indices of the rows in one exact cover, if any exists.
    std::optional<std::vector<std::size_t>> solve() {
        std::vector<std::size_t> chosen;
        if (search(chosen)) return chosen;
        return std::nullopt;
    }

  private:
    struct Node {
        std::size_t left = 0, right = 0, up = 0, down = 0, column = 0, row = 0;
    };

    std::size_t n_items_;
    std::size_t n_rows_ = 0;
    std::vector<Node> nodes_;
    std::vector<std::size_t> sizes_;

    void cover(std::size_t c) {
        nodes_[nodes_[c].right].left = nodes_[c].left;
        nodes_[nodes_[c].left].right = nodes_[c].right;
        for (std::size_t i = nodes_[c].down; i != c; i = nodes_[i].down)
            for (std::size_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
                nodes_[nodes_[j].down].up = nodes_[j].up;
                nodes_[nodes_[j].up].down = nodes_[j].down;
                --sizes_[nodes_[j].column];
            }
    }

    void uncover(std::size_t c) {
        for (std::size_t i = nodes_[c].up; i != c; i = nodes_[i].up)
            for (std::size_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
                ++sizes_[nodes_[j].column];
                nodes_[nodes_[j].down].up = j;
                nodes_[nodes_[j].up].down = j;
            }
        nodes_[nodes_[c].right].left = c;
        nodes_[nodes_[c].left].right = c;
    }

    bool search(std::vector<std::size_t>& chosen) {
        if (nodes_[0].right == 0) return true;
        std::size_t best = nodes_[0].right;
        for (std::size_t c = nodes_[best].right; c != 0; c = nodes_[c].right)
            if (sizes_[c] < sizes_[best]) best = c;
        if (sizes_[best] == 0) return false;
        cover(best);
        for (std::size_t r = nodes_[best].down; r != best; r = nodes_[r].down) {
            chosen.push_back(nodes_[r].row);
            for (std::size_t j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].column);
            if (search(chosen)) return true;
            for (std::size_t j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].column);
            chosen.pop_back();
        }
        uncover(best);
        return false;
    }
};

} // namespace shellcheck
