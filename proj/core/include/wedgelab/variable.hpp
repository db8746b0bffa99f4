#pragma once

#include <compare>
#include <string>

namespace wedgelab {

/// A ring variable: a plain coordinate x, a jet coordinate x_(n), or a wedge
/// coordinate x_(i,j).  Variables are immutable values with a deterministic
/// total order: base name lexicographic, then kind, then superscripts
/// (graded-lex on (i,j), plain index for jets).
class Variable {
  public:
    enum class Kind { plain = 0, jet = 1, wedge = 2 };

    Variable() : kind_(Kind::plain) {}

    static Variable plain(std::string base);
    static Variable jet(std::string base, int n);
    static Variable wedge(std::string base, int i, int j);

    const std::string& base() const { return base_; }
    Kind kind() const { return kind_; }
    /// jet superscript n (jet variables only)
    int index() const { return i_; }
    int sup_i() const { return i_; }
    int sup_j() const { return j_; }
    /// i+j for wedge, n for jet, 0 for plain
    int sup_total() const { return i_ + j_; }

    /// printed form: "x", "x_(2)", "x_(1,0)"
    std::string name() const;

    std::strong_ordering operator<=>(const Variable& o) const;
    bool operator==(const Variable& o) const = default;

  private:
    std::string base_;
    Kind kind_;
    int i_ = 0;  // jet index, or wedge s-superscript
    int j_ = 0;  // wedge t-superscript
};

}  // namespace wedgelab
