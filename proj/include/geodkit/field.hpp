#pragma once

#include <vector>

namespace geodkit {

/// GF(q) for q in {2, 3, 4, 5, 7, 8, 9}. Elements are 0..q-1; for q = p^e an
/// element encodes the coefficient vector (c_0, ..., c_{e-1}) in base p,
/// reduced modulo a fixed irreducible polynomial. 0 and 1 are the field's
/// zero and one.
class FiniteField {
 public:
  /// Throws InputError for an unsupported order.
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  /// Throws std::domain_error for a = 0.
  int inv(int a) const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * q_ + b); }

  int q_ = 0;
  int p_ = 0;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
};

/// True for the orders FiniteField accepts.
bool supported_field_order(int q);

}  // namespace geodkit
