#ifndef PERMCLASS_CLASS_EXPR_HPP
#define PERMCLASS_CLASS_EXPR_HPP

#include <string>
#include <string_view>
#include <vector>

#include "permclass/permutation.hpp"

namespace permclass {

/**
 * Symbolic permutation-class expression.
 *
 * Leaves are atoms (I, D, Ik(k), Dk(k), L, Lk(k), F2, Vk(k), Hk(k), Av(...),
 * All); inner nodes combine children by composition, merge, vertical or
 * horizontal merge, intersection, union and the three symmetries.
 *
 * Textual grammar (whitespace-insensitive):
 *
 *   expr := atom | name "(" args ")"
 *   atom := "I" | "D" | "L" | "F2" | "All"
 *   name := "Ik" | "Dk" | "Lk" | "Vk" | "Hk" | "Av" | "V" | "H" | "comp"
 *         | "merge" | "and" | "or" | "rev" | "cpl" | "inv"
 */
class ClassExpr {
public:
  enum class Kind {
    Inc,       // I
    Dec,       // D
    IncK,      // Ik(k)
    DecK,      // Dk(k)
    Layered,   // L
    LayeredK,  // Lk(k)
    F2,        // layered, layers of length <= 2
    VertK,     // Vk(k)
    HorizK,    // Hk(k)
    Avoid,     // Av(B)
    All,
    Compose,   // comp(A, B, ...)
    Merge,     // merge(A, B, ...)
    Vertical,  // V(C1, ..., Ck)
    Horizontal,// H(C1, ..., Ck)
    Intersect, // and(...)
    Union,     // or(...)
    Reverse,   // rev(A)
    Complement,// cpl(A)
    Inverse,   // inv(A)
  };

  ClassExpr() = default;

  static ClassExpr inc() { return ClassExpr(Kind::Inc); }
  static ClassExpr dec() { return ClassExpr(Kind::Dec); }
  static ClassExpr layered() { return ClassExpr(Kind::Layered); }
  static ClassExpr f2() { return ClassExpr(Kind::F2); }
  static ClassExpr all() { return ClassExpr(Kind::All); }
  static ClassExpr inc_k(int k);
  static ClassExpr dec_k(int k);
  static ClassExpr layered_k(int k);
  static ClassExpr vert_k(int k);
  static ClassExpr horiz_k(int k);
  static ClassExpr avoid(std::vector<Permutation> basis);
  static ClassExpr compose(std::vector<ClassExpr> factors);
  static ClassExpr merge(std::vector<ClassExpr> parts);
  static ClassExpr vertical(std::vector<ClassExpr> parts);
  static ClassExpr horizontal(std::vector<ClassExpr> parts);
  static ClassExpr intersect(std::vector<ClassExpr> parts);
  static ClassExpr unite(std::vector<ClassExpr> parts);
  static ClassExpr rev(ClassExpr child);
  static ClassExpr cpl(ClassExpr child);
  static ClassExpr inv(ClassExpr child);

  /// Throws ParseError (with character position) on syntax, arity or
  /// permutation-literal errors.
  static ClassExpr parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  int param() const noexcept { return param_; }
  const std::vector<Permutation> &basis() const noexcept { return basis_; }
  const std::vector<ClassExpr> &children() const noexcept { return children_; }
  bool is_atom() const noexcept;

  /// Text in the grammar above, children in their given order.
  std::string render() const;
  /// Like render(), but children of commutative nodes (merge, and, or) are
  /// sorted, so equal classes built in different orders share one key.
  std::string canonical() const;

  friend bool operator==(const ClassExpr &, const ClassExpr &) = default;

private:
  explicit ClassExpr(Kind kind) : kind_(kind) {}
  ClassExpr(Kind kind, std::vector<ClassExpr> children);
  std::string render_impl(bool canonical) const;

  Kind kind_ = Kind::All;
  int param_ = 0;
  std::vector<Permutation> basis_;
  std::vector<ClassExpr> children_;
};

} // namespace permclass

#endif
