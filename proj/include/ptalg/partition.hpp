/**
 * @file partition.hpp
 * @brief Integer partitions and Young diagrams.
 */

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ptalg {

class Partition {
public:
    /// The empty partition of 0.
    Partition() = default;

    /// Trailing zeros are dropped; throws unless the parts are weakly decreasing
    /// and nonnegative.
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const { return parts_; }
    int weight() const { return weight_; }
    int height() const { return static_cast<int>(parts_.size()); }

    /// Length of the main diagonal.
    int rank() const;

    /// Row length, 0 beyond the height. Rows are 1-based.
    int row(int i) const;

    Partition conjugate() const;

    /// Frobenius characteristic (a, b): a_i counts boxes below the i-th
    /// diagonal box, b_i counts boxes to its right.
    std::pair<std::vector<int>, std::vector<int>> characteristic() const;

    /// Number of standard Young tableaux (hook-length formula).
    long long dimension() const;

    bool contains(const Partition &other) const;

    auto operator<=>(const Partition &) const = default;
    bool operator==(const Partition &) const = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Partitions of m, largest first: (3), (2,1), (1,1,1).
std::vector<Partition> partitions_of(int m);

struct AddedBox {
    Partition nu;
    int row = 0;     ///< 1-based row of the new box
    int column = 0;  ///< 1-based column of the new box
    /// The new box lies on the main diagonal, extending it.
    bool extends_diagonal = false;
    int content() const { return column - row; }
};

/// All ways to add one box to alpha, ordered by row of the added box.
std::vector<AddedBox> add_box(const Partition &alpha);

/// "3,1"; the empty partition renders as "".
std::string to_string(const Partition &p);

/// Parses "3,1", "(3,1)", "3 1" or "" / "()" / "0" for the empty partition.
Partition parse_partition(std::string_view text);

} // namespace ptalg
