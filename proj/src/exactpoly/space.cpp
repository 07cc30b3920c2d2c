#include "exactpoly/space.hpp"

#include <algorithm>

#include "exactpoly/monomial.hpp"

namespace exactpoly {

namespace {

void check_size(std::size_t n) {
    if (n > kMaxVars) throw std::length_error("too many variables for packed monomials");
}

}  // namespace

Space VarSpace::xy(int n) {
    if (n < 2) throw std::invalid_argument("XY space needs n >= 2");
    auto s = std::make_shared<VarSpace>();
    s->kind_ = SpaceKind::XY;
    s->n_ = n;
    for (int i = 1; i <= n; ++i) s->names_.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) s->names_.push_back("y" + std::to_string(i));
    check_size(s->names_.size());
    return s;
}

Space VarSpace::z(std::vector<int> rows, std::vector<int> cols, std::vector<std::pair<int, int>> excluded) {
    auto s = std::make_shared<VarSpace>();
    s->kind_ = SpaceKind::Z;
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    for (int j : rows)
        for (int i : cols) {
            if (std::find(excluded.begin(), excluded.end(), std::make_pair(j, i)) != excluded.end()) continue;
            s->zpairs_.emplace_back(j, i);
            s->names_.push_back("z" + std::to_string(j) + "_" + std::to_string(i));
        }
    s->rows_ = std::move(rows);
    s->cols_ = std::move(cols);
    check_size(s->names_.size());
    return s;
}

Space VarSpace::sym(int n) {
    auto s = std::make_shared<VarSpace>();
    s->kind_ = SpaceKind::Sym;
    s->n_ = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) {
                s->zpairs_.emplace_back(i, j);
                s->names_.push_back("E" + std::to_string(i) + "_" + std::to_string(j));
            }
    for (int r = 1; r < n; ++r) {
        s->zpairs_.emplace_back(r, r);
        s->names_.push_back("H" + std::to_string(r));
    }
    check_size(s->names_.size());
    return s;
}

int VarSpace::x(int i) const {
    if (kind_ != SpaceKind::XY || i < 1 || i > n_) throw std::out_of_range("x index");
    return i - 1;
}

int VarSpace::y(int i) const {
    if (kind_ != SpaceKind::XY || i < 1 || i > n_) throw std::out_of_range("y index");
    return n_ + i - 1;
}

int VarSpace::zvar(int j, int i) const {
    auto it = std::find(zpairs_.begin(), zpairs_.end(), std::make_pair(j, i));
    return it == zpairs_.end() ? -1 : static_cast<int>(it - zpairs_.begin());
}

bool VarSpace::operator==(const VarSpace& o) const {
    return kind_ == o.kind_ && n_ == o.n_ && zpairs_ == o.zpairs_ && names_ == o.names_;
}

}  // namespace exactpoly
