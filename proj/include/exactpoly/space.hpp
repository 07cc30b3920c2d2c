#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exactpoly {

enum class SpaceKind { XY, Z, Sym };

// Variable layout of a polynomial ring.
//   XY(n):  x1..xn at 0..n-1, y1..yn at n..2n-1
//   Z:      z_{j,i} for (j,i) in rows x cols minus excluded, row-major
//   Sym(n): one symbol per sl(n) basis element, see oscrep::generator_index
class VarSpace {
public:
    static std::shared_ptr<const VarSpace> xy(int n);
    static std::shared_ptr<const VarSpace> z(std::vector<int> rows, std::vector<int> cols,
                                             std::vector<std::pair<int, int>> excluded = {});
    static std::shared_ptr<const VarSpace> sym(int n);

    SpaceKind kind() const { return kind_; }
    int n() const { return n_; }
    int nvars() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }

    int x(int i) const;  // 1-based index
    int y(int i) const;
    int zvar(int j, int i) const;  // -1 when absent
    std::pair<int, int> zpair(int v) const { return zpairs_.at(static_cast<std::size_t>(v)); }
    const std::vector<int>& rows() const { return rows_; }
    const std::vector<int>& cols() const { return cols_; }

    bool operator==(const VarSpace& o) const;
    bool operator!=(const VarSpace& o) const { return !(*this == o); }

private:
    SpaceKind kind_ = SpaceKind::XY;
    int n_ = 0;
    std::vector<int> rows_, cols_;
    std::vector<std::pair<int, int>> zpairs_;
    std::vector<std::string> names_;
};

using Space = std::shared_ptr<const VarSpace>;

struct SpaceMismatch : std::invalid_argument {
    SpaceMismatch() : std::invalid_argument("polynomial spaces differ") {}
};

inline void require_same(const Space& a, const Space& b) {
    if (a != b && *a != *b) throw SpaceMismatch();
}

}  // namespace exactpoly
