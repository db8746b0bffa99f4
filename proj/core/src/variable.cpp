#include "wedgelab/variable.hpp"

#include <stdexcept>
#include <utility>

namespace wedgelab {

Variable Variable::plain(std::string base) {
    Variable v;
    v.base_ = std::move(base);
    v.kind_ = Kind::plain;
    return v;
}

Variable Variable::jet(std::string base, int n) {
    if (n < 0) throw std::invalid_argument("jet superscript must be nonnegative");
    Variable v;
    v.base_ = std::move(base);
    v.kind_ = Kind::jet;
    v.i_ = n;
    return v;
}

Variable Variable::wedge(std::string base, int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("wedge superscripts must be nonnegative");
    Variable v;
    v.base_ = std::move(base);
    v.kind_ = Kind::wedge;
    v.i_ = i;
    v.j_ = j;
    return v;
}

std::string Variable::name() const {
    switch (kind_) {
        case Kind::plain: return base_;
        case Kind::jet: return base_ + "_(" + std::to_string(i_) + ")";
        case Kind::wedge:
            return base_ + "_(" + std::to_string(i_) + "," + std::to_string(j_) + ")";
    }
    return base_;
}

std::strong_ordering Variable::operator<=>(const Variable& o) const {
    if (auto c = base_.compare(o.base_); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = static_cast<int>(kind_) <=> static_cast<int>(o.kind_); c != 0) return c;
    // wedge superscripts compare graded-lex; jets by index (j_ is 0 there)
    if (auto c = (i_ + j_) <=> (o.i_ + o.j_); c != 0) return c;
    if (auto c = i_ <=> o.i_; c != 0) return c;
    return j_ <=> o.j_;
}

}  // namespace wedgelab
