#include "geodkit/field.hpp"

#include <stdexcept>
#include <string>

#include "geodkit/graph.hpp"

namespace geodkit {

namespace {

struct Spec {
  int q;
  int p;
  int e;
  // Low coefficients of the monic modulus x^e + ... (length e).
  std::vector<int> modulus;
};

const Spec* find_spec(int q) {
  // x^2+x+1, x^3+x+1, x^2+1
  static const std::vector<Spec> specs = {
      {2, 2, 1, {0}}, {3, 3, 1, {0}}, {4, 2, 2, {1, 1}}, {5, 5, 1, {0}},
      {7, 7, 1, {0}}, {8, 2, 3, {1, 1, 0}}, {9, 3, 2, {1, 0}},
  };
  for (const auto& s : specs) {
    if (s.q == q) {
      return &s;
    }
  }
  return nullptr;
}

std::vector<int> digits(int a, int p, int e) {
  std::vector<int> d(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) {
    d[static_cast<std::size_t>(i)] = a % p;
    a /= p;
  }
  return d;
}

int pack(const std::vector<int>& d, int p) {
  int a = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) {
    a = a * p + *it;
  }
  return a;
}

int poly_mul(int a, int b, const Spec& s) {
  const auto da = digits(a, s.p, s.e);
  const auto db = digits(b, s.p, s.e);
  std::vector<int> prod(static_cast<std::size_t>(2 * s.e - 1), 0);
  for (int i = 0; i < s.e; ++i) {
    for (int j = 0; j < s.e; ++j) {
      auto& c = prod[static_cast<std::size_t>(i + j)];
      c = (c + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % s.p;
    }
  }
  // x^e = -(m_0 + m_1 x + ... )
  for (int k = 2 * s.e - 2; k >= s.e; --k) {
    const int c = prod[static_cast<std::size_t>(k)];
    if (c == 0) {
      continue;
    }
    prod[static_cast<std::size_t>(k)] = 0;
    for (int i = 0; i < s.e; ++i) {
      auto& t = prod[static_cast<std::size_t>(k - s.e + i)];
      t = ((t - c * s.modulus[static_cast<std::size_t>(i)]) % s.p + s.p) % s.p;
    }
  }
  prod.resize(static_cast<std::size_t>(s.e));
  return pack(prod, s.p);
}

}  // namespace

bool supported_field_order(int q) { return find_spec(q) != nullptr; }

FiniteField::FiniteField(int q) {
  const Spec* s = find_spec(q);
  if (s == nullptr) {
    throw InputError("unsupported field order " + std::to_string(q) + " (expected 2, 3, 4, 5, 7, 8 or 9)");
  }
  q_ = q;
  p_ = s->p;
  const auto n = static_cast<std::size_t>(q);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, s->p, s->e);
    std::vector<int> dn(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) {
      dn[i] = (s->p - da[i]) % s->p;
    }
    neg_[static_cast<std::size_t>(a)] = pack(dn, s->p);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, s->p, s->e);
      std::vector<int> sum(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) {
        sum[i] = (da[i] + db[i]) % s->p;
      }
      add_[idx(a, b)] = pack(sum, s->p);
      mul_[idx(a, b)] = poly_mul(a, b, *s);
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (mul(a, b) == 1) {
        inv_[static_cast<std::size_t>(a)] = b;
      }
    }
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) {
    throw std::domain_error("zero has no inverse");
  }
  return inv_[static_cast<std::size_t>(a)];
}

}  // namespace geodkit
