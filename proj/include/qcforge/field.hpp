#pragma once

// Arithmetic in the small base fields GF(2), GF(3), GF(4) and GF(5).
//
// Elements are plain uint8_t values 0..q-1.  GF(4) is represented in the
// polynomial basis {1, a} with a^2 = a + 1, so value 2 is a and value 3 is
// b = a + 1 = a^2.  Everything is table driven; a Field is a process-wide
// singleton obtained through Field::of(q), so identity comparison of
// pointers is enough to detect mixed-field arithmetic.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcforge {

class Field {
public:
  static const Field& of(int q) {
    static const Field f2(2), f3(3), f4(4), f5(5);
    switch (q) {
      case 2: return f2;
      case 3: return f3;
      case 4: return f4;
      case 5: return f5;
      default:
        throw std::invalid_argument("unsupported field order " + std::to_string(q));
    }
  }

  int q() const { return q_; }
  int characteristic() const { return char_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[a][b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[a][neg_[b]]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a][b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t inv(uint8_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
  }
  uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

  bool valid(uint8_t a) const { return a < q_; }

  // Singletons, so pointer identity decides field equality.
  friend bool operator==(const Field& a, const Field& b) { return &a == &b; }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

private:
  explicit Field(int q) : q_(q) {
    if (q == 4) {
      char_ = 2;
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          add_[a][b] = uint8_t(a ^ b);
          mul_[a][b] = gf4_mul(uint8_t(a), uint8_t(b));
        }
      }
    } else {
      char_ = q;
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
          add_[a][b] = uint8_t((a + b) % q);
          mul_[a][b] = uint8_t((a * b) % q);
        }
    }
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        if (add_[a][b] == 0) neg_[a] = uint8_t(b);
        if (a != 0 && mul_[a][b] == 1) inv_[a] = uint8_t(b);
      }
    }
  }

  // Multiplication of 2-bit vectors (c0, c1) ~ c0 + c1*a modulo a^2 = a + 1.
  static uint8_t gf4_mul(uint8_t x, uint8_t y) {
    unsigned x0 = x & 1, x1 = x >> 1, y0 = y & 1, y1 = y >> 1;
    unsigned hi = x1 * y1;                 // coefficient of a^2
    unsigned c0 = (x0 * y0) ^ hi;
    unsigned c1 = (x0 * y1) ^ (x1 * y0) ^ hi;
    return uint8_t((c1 << 1) | c0);
  }

  int q_;
  int char_;
  std::array<std::array<uint8_t, 5>, 5> add_{};
  std::array<std::array<uint8_t, 5>, 5> mul_{};
  std::array<uint8_t, 5> neg_{};
  std::array<uint8_t, 5> inv_{};
};

inline void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw std::invalid_argument("operands live in different fields");
}

}  // namespace qcforge
