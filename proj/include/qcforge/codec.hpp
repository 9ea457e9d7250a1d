#pragma once

// Compact generator-string codec. Coefficient strings are printed in ascending
// powers, packed into radix digits where the field allows it:
//   GF(2): base 8, one digit per three coefficients, digit = c0 + 2*c1 + 4*c2
//   GF(3): base 9, one digit per two coefficients,  digit = c0 + 3*c1
//   GF(4): literal characters 0, 1, a, b (b = a^2 = a + 1)
//   GF(5): literal digits 0..4
// The low coefficient always lands in the low bit of its digit, so the
// polynomial 1 + x^2 + x^3 + x^4 over GF(2) reads "10111", pads to "101110",
// and encodes as "53".

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcforge/field.hpp"
#include "qcforge/poly.hpp"

namespace qcforge {

inline int codec_block_size(int q) {
  switch (q) {
    case 2: return 3;
    case 3: return 2;
    case 4:
    case 5: return 1;
    default: throw std::invalid_argument("no generator-string codec for q=" + std::to_string(q));
  }
}

namespace detail {

inline uint8_t gf4_char_value(char ch, size_t pos) {
  switch (ch) {
    case '0': return 0;
    case '1': return 1;
    case 'a': return 2;
    case 'b': return 3;
    default:
      throw std::invalid_argument(std::string("invalid GF(4) generator character '") + ch +
                                  "' at position " + std::to_string(pos));
  }
}

inline char gf4_value_char(uint8_t v) {
  static const char tab[4] = {'0', '1', 'a', 'b'};
  return tab[v];
}

}  // namespace detail

inline Poly decode_gen(const std::string& s, const Field& f) {
  if (s.empty()) throw std::invalid_argument("empty generator string");
  const int q = f.q();
  const int block = codec_block_size(q);
  const int radix = (q == 2) ? 8 : (q == 3) ? 9 : q;
  std::vector<uint8_t> coeffs;
  coeffs.reserve(s.size() * size_t(block));
  for (size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (q == 4) {
      coeffs.push_back(detail::gf4_char_value(ch, i));
      continue;
    }
    if (ch < '0' || ch >= '0' + radix)
      throw std::invalid_argument(std::string("invalid base-") + std::to_string(radix) +
                                  " digit '" + ch + "' at position " + std::to_string(i));
    int d = ch - '0';
    for (int j = 0; j < block; ++j) {
      coeffs.push_back(uint8_t(d % q));
      d /= q;
    }
  }
  return Poly(f, std::move(coeffs));
}

// Literal per-coordinate strings, used for explicit matrix rows: one character
// per field element, ascending coordinate index, same alphabet as the literal
// generator convention (digits, with a/b for GF(4)).
inline std::vector<uint8_t> decode_coords(const std::string& s, const Field& f) {
  const int q = f.q();
  std::vector<uint8_t> out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (q == 4) {
      out.push_back(detail::gf4_char_value(ch, i));
      continue;
    }
    if (ch < '0' || ch >= '0' + q)
      throw std::invalid_argument(std::string("invalid GF(") + std::to_string(q) +
                                  ") coordinate '" + ch + "' at position " + std::to_string(i));
    out.push_back(uint8_t(ch - '0'));
  }
  return out;
}

inline std::string encode_coords(const std::vector<uint8_t>& v, const Field& f) {
  std::string out;
  out.reserve(v.size());
  for (uint8_t c : v) {
    if (c >= f.q()) throw std::invalid_argument("coordinate value out of range");
    out.push_back(f.q() == 4 ? detail::gf4_value_char(c) : char('0' + c));
  }
  return out;
}

inline std::string encode_gen(const Poly& p) {
  const Field& f = p.field();
  const int q = f.q();
  const int block = codec_block_size(q);
  std::vector<uint8_t> c = p.coeffs();
  if (c.empty()) c.push_back(0);
  while (c.size() % size_t(block) != 0) c.push_back(0);
  std::string out;
  out.reserve(c.size() / size_t(block));
  for (size_t i = 0; i < c.size(); i += size_t(block)) {
    if (q == 4) {
      out.push_back(detail::gf4_value_char(c[i]));
      continue;
    }
    int d = 0;
    for (int j = block - 1; j >= 0; --j) d = d * q + c[i + size_t(j)];
    out.push_back(char('0' + d));
  }
  return out;
}

}  // namespace qcforge
